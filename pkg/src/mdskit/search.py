"""Exhaustive search for MDS codes, and empirical theorem checks.

An (n, k)_q MDS code is exactly a set of q^k words of length n over
{0..q-1} with pairwise distance at least n-k+1.  Any such code projects
bijectively onto its first k coordinates, so it holds exactly one word
per "slot" (per k-symbol information prefix).  The walk below fills the
q^k slots in lexicographic order, which visits every code exactly once,
choosing at each step a word compatible with everything chosen so far.
It prunes on exact facts about any completion:

  P1: every unfilled slot must still have a compatible candidate, and
      there must be at least as many compatible candidates left as
      unfilled slots;
  P2: in a finished code every symbol occurs exactly q^(k-1) times at
      every position, so no (position, symbol) pair may be overfull or
      have too few remaining candidates.

Compatibility sets are kept as one bitmask per candidate word, so the
inner loop is integer AND plus popcount.

Existence questions allow a further restriction that counting does not:
relabeling symbols within each position preserves all distances, so any
code can be carried onto one in a normal form with several words pinned
outright (see _canonical_candidates).  Length-bound checks rely on one
more closure fact, recorded where used: deleting a coordinate of an MDS
code leaves an MDS code, so non-existence at length L rules out every
length above L as well.
"""

import warnings
from dataclasses import dataclass
from itertools import product

from .codes import Code, is_mds, weight
from .errors import (
    InvalidParameters,
    NotMds,
    OutOfStatedRegime,
    SearchSpaceTooLarge,
    ZeroWordAbsent,
)
from .spectra import (
    predicted_spectrum,
    weight_distribution_bruteforce,
    weight_distribution_formula,
    weight_spectrum,
)

_UNIVERSE_LIMIT = 2 ** 18
_CANDIDATE_LIMIT = 2 ** 13

_MODES = ("count", "exists", "collect")


@dataclass
class SearchSpec:
    """What to search for and how far to let the walk grow.

    max_nodes bounds the number of partial extensions tried; a walk that
    exhausts it stops with complete=False rather than running without
    bound, since backtracking cost is exponential in the worst case.
    """
    n: int
    k: int
    q: int
    require_zero: bool = False
    mode: str = "count"
    limit: int = None
    max_words: int = 2 ** 16
    max_length: int = 12
    max_nodes: int = None

    def __post_init__(self):
        if self.q < 2 or self.k < 1 or self.n < self.k:
            raise InvalidParameters(
                f"bad search shape (n={self.n}, k={self.k}, q={self.q})")
        if self.mode not in _MODES:
            raise InvalidParameters(f"mode must be one of {_MODES}")
        if self.limit is not None and self.limit < 1:
            raise InvalidParameters("limit must be positive")
        if self.max_nodes is not None and self.max_nodes < 1:
            raise InvalidParameters("max_nodes must be positive")


@dataclass
class SearchResult:
    spec: SearchSpec
    count: int
    codes: tuple = ()
    complete: bool = True


def _guard(spec):
    if spec.q ** spec.k > spec.max_words:
        raise SearchSpaceTooLarge(
            f"q^k = {spec.q ** spec.k} exceeds the word limit {spec.max_words}")
    if spec.n > spec.max_length:
        raise SearchSpaceTooLarge(
            f"n = {spec.n} exceeds the length limit {spec.max_length}")
    if spec.q ** spec.n > _UNIVERSE_LIMIT:
        raise SearchSpaceTooLarge(
            f"q^n = {spec.q ** spec.n} exceeds the universe limit {_UNIVERSE_LIMIT}")


_HORIZON = 64


def _walk(q, n, k, cand, emit, max_nodes):
    """Depth-first walk over all MDS codes whose words come from cand,
    filling one word per information prefix in lexicographic prefix
    order.  Calls emit once per finished code with its word list and
    stops early when emit returns True.  Returns True when the walk ran
    to completion."""
    m = len(cand)
    if m > _CANDIDATE_LIMIT:
        raise SearchSpaceTooLarge(
            f"{m} candidate words exceed the candidate limit {_CANDIDATE_LIMIT}")

    d = n - k + 1
    per_symbol = q ** (k - 1)
    slots = q ** k
    cand = sorted(cand)

    # cand is sorted, so words sharing an information prefix (the first k
    # symbols) are contiguous; slot t holds candidates start[t]..start[t+1]
    start = [0] * (slots + 1)
    for w in cand:
        sid = 0
        for s in w[:k]:
            sid = sid * q + s
        start[sid + 1] += 1
    for t in range(slots):
        start[t + 1] += start[t]
    window = [(1 << start[t + 1]) - (1 << start[t]) for t in range(slots)]

    # one compatibility bitmask per candidate; bit j of compat[i] says
    # cand[i] and cand[j] are at distance >= d
    compat = [0] * m
    for i in range(m):
        a = cand[i]
        mask = compat[i]
        for j in range(i + 1, m):
            b = cand[j]
            if sum(x != y for x, y in zip(a, b)) >= d:
                mask |= 1 << j
                compat[j] |= 1 << i
        compat[i] = mask

    # bit j of by_symbol[p][s] says cand[j] has symbol s at position p;
    # only positions outside the information prefix need balance checks,
    # the slots force balance on the first k positions
    by_symbol = [[0] * q for _ in range(n)]
    for j, w in enumerate(cand):
        for p in range(k, n):
            by_symbol[p][w[p]] |= 1 << j

    used = [[0] * q for _ in range(n)]
    chosen = []
    complete = True
    nodes = 0
    budget = max_nodes
    # frames are (available-candidates mask, cursor); the frame at depth
    # t fills slot t, and owns the word chosen just before it was pushed,
    # except the bottom frame
    stack = [((1 << m) - 1, 0)]
    while stack:
        avail, i = stack[-1]
        t = len(stack) - 1
        rest = avail & window[t] & (-1 << i)
        if rest == 0:
            stack.pop()
            if stack:
                w = cand[chosen.pop()]
                for p in range(k, n):
                    used[p][w[p]] -= 1
            continue
        if budget is not None and nodes >= budget:
            complete = False
            break
        nodes += 1
        j = (rest & -rest).bit_length() - 1
        stack[-1] = (avail, j + 1)

        w = cand[j]
        chosen.append(j)
        for p in range(k, n):
            used[p][w[p]] += 1

        if t + 1 == slots:
            stop = emit([cand[c] for c in chosen])
            chosen.pop()
            for p in range(k, n):
                used[p][w[p]] -= 1
            if stop:
                complete = False
                break
            continue

        child = avail & compat[j]
        dead = child.bit_count() < slots - t - 1
        if not dead:
            for s in range(t + 1, min(slots, t + 1 + _HORIZON)):
                if child & window[s] == 0:
                    dead = True
                    break
        if not dead:
            for p in range(k, n):
                row = used[p]
                masks = by_symbol[p]
                for s in range(q):
                    u = row[s]
                    if u > per_symbol or (
                            u < per_symbol
                            and u + (child & masks[s]).bit_count() < per_symbol):
                        dead = True
                        break
                if dead:
                    break
        if dead:
            chosen.pop()
            for p in range(k, n):
                used[p][w[p]] -= 1
            continue
        stack.append((child, start[t + 1]))

    return complete


def enumerate_mds(spec):
    """Walk all (n, k)_q MDS codes (optionally only those containing the
    zero word) and count, collect, or stop at the first one."""
    _guard(spec)
    q, n, k = spec.q, spec.n, spec.k
    d = n - k + 1
    universe = list(product(range(q), repeat=n))
    if spec.require_zero:
        # any other word with an all-zero information prefix has weight
        # at most n-k < d, so the zero slot is pinned to the zero word
        cand = [w for w in universe if weight(w) >= d or not any(w)]
    else:
        cand = universe

    count = 0
    codes = []
    limit = spec.limit
    if spec.mode == "exists":
        limit = 1

    def emit(words):
        nonlocal count
        count += 1
        if spec.mode == "collect":
            codes.append(Code(q, words))
        return limit is not None and count >= limit

    complete = _walk(q, n, k, cand, emit, spec.max_nodes)
    return SearchResult(spec, count, tuple(codes), complete)


def _canonical_candidates(q, n, k, universe):
    """Candidates for an existence search, cut down to one normal form
    per relabeling class.  Relabeling symbols within each position
    preserves all distances, and composing such relabelings carries any
    (n, k)_q MDS code onto one that

      - contains the zero word,
      - holds, for each y, the word (0,..,0, y, y,..,y) at information
        prefix (0,..,0, y): the projections of the prefix-(0,..,0,y)
        words onto any later position are a bijection in y fixing 0, so
        a relabeling of that position straightens them to y,
      - for k >= 2, carries symbol x at position k in the word with
        information prefix (x, 0,..,0): those symbols are a bijection in
        x fixing 0, so a relabeling of the first position straightens
        them without disturbing the words pinned above, which all carry
        0 in the first position.
    """
    d = n - k + 1
    out = []
    for w in universe:
        if not any(w):
            out.append(w)
            continue
        if weight(w) < d:
            continue
        if not any(w[:k - 1]):
            y = w[k - 1]
            if any(w[p] != y for p in range(k, n)):
                continue
        if k >= 2 and n > k and w[0] and not any(w[1:k]) and w[k] != w[0]:
            continue
        out.append(w)
    return out


def exists_mds(n, k, q, max_words=2 ** 16, max_length=12, max_nodes=None):
    """Whether any (n, k)_q MDS code exists.  Only codes in the normal
    form of _canonical_candidates are walked, which is enough: every
    code is carried onto one of them by symbol relabelings that preserve
    all distances.  A node budget that runs out before the question is
    settled raises rather than guessing."""
    spec = SearchSpec(n, k, q, require_zero=True, mode="exists",
                      max_words=max_words, max_length=max_length,
                      max_nodes=max_nodes)
    _guard(spec)
    universe = list(product(range(q), repeat=n))
    found = False

    def emit(words):
        nonlocal found
        found = True
        return True

    complete = _walk(q, n, k, _canonical_candidates(q, n, k, universe),
                     emit, max_nodes)
    if found:
        return True
    if not complete:
        raise SearchSpaceTooLarge(
            f"node budget {max_nodes} exhausted before settling (n={n}, k={k})_{q}")
    return False


# ------------------------------------------------- theorem checks

@dataclass(frozen=True)
class TheoremReport:
    claim: str
    passed: bool
    out_of_regime: bool = False
    detail: str = ""


def verify_bounds(q, k_max, max_words=2 ** 16, max_length=12, max_nodes=None):
    """Confirm by exhaustive search that no (n, k)_q MDS code outruns the
    length bound: n <= k+1 when q <= k, else n <= q+k-1, for each k in
    2..k_max.  Checking length bound+1 suffices, because deleting any
    coordinate of a longer MDS code leaves an MDS code.  Sizes the guards
    refuse or the node budget cannot settle are skipped; only searched
    cases are reported."""
    reports = []
    for k in range(2, k_max + 1):
        bound = k + 1 if q <= k else q + k - 1
        n = bound + 1
        try:
            found = exists_mds(n, k, q, max_words=max_words,
                               max_length=max_length, max_nodes=max_nodes)
        except SearchSpaceTooLarge:
            continue
        detail = f"searched all (n={n}, k={k})_{q} candidates up to relabeling"
        reports.append(TheoremReport(
            claim=f"no (n, {k})_{q} MDS code with n > {bound}",
            passed=not found,
            detail=detail if not found else f"found an (n={n}, k={k})_{q} MDS code"))
    return reports


def verify_spectrum_theorems(code):
    """Check the attained nonzero weights of an MDS code containing zero
    against the provable spectrum, plus the full-length-word claims."""
    report = is_mds(code)
    if not report.is_mds:
        raise NotMds(f"d={report.d} < {report.singleton_bound}")
    if not code.contains_zero():
        raise ZeroWordAbsent("spectrum checks are stated for codes containing zero")
    n, k, q = code.n, code.k, code.q
    actual = weight_spectrum(code)
    predicted = predicted_spectrum(n, k, q)
    reports = [TheoremReport(
        claim=f"weight spectrum of (n={n}, k={k})_{q} with zero",
        passed=actual == predicted,
        out_of_regime=q < k,
        detail=f"actual {sorted(actual)}, predicted {sorted(predicted)}")]
    if n < q + k - 1:
        reports.append(TheoremReport(
            claim=f"a full-weight word exists (n={n} < q+k-1={q + k - 1})",
            passed=n in actual))
    if n == q + k - 1 and k > 2 and q > 2:
        reports.append(TheoremReport(
            claim=f"a full-weight word exists (n={n} = q+k-1, k>2, q>2)",
            passed=n in actual))
    return reports


def verify_distribution(code):
    """Compare the brute-force weight distribution of an MDS code
    containing zero with the closed form.  Outside the stated regime
    (q < k) the outcome is recorded as empirical agreement, not a
    theorem check."""
    report = is_mds(code)
    if not report.is_mds:
        raise NotMds(f"d={report.d} < {report.singleton_bound}")
    if not code.contains_zero():
        raise ZeroWordAbsent("the closed form counts weights relative to zero")
    n, k, q = code.n, code.k, code.q
    brute = weight_distribution_bruteforce(code)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", OutOfStatedRegime)
        closed = weight_distribution_formula(n, k, q)
    if brute == closed:
        detail = "brute force matches the closed form"
    else:
        diffs = sorted(set(brute.counts) | set(closed.counts))
        bad = [w for w in diffs if brute[w] != closed[w]]
        detail = (f"mismatch at weights {bad}: "
                  f"brute {[brute[w] for w in bad]}, closed {[closed[w] for w in bad]}")
    return TheoremReport(
        claim=f"closed-form weight distribution of (n={n}, k={k})_{q}",
        passed=brute == closed,
        out_of_regime=q < k,
        detail=detail)
