"""Weight and distance spectra: brute-force counts and closed forms.

For an (n, k)_q MDS code containing the zero word, the number of words of
weight w >= d (d = n-k+1) has the exact closed form

    E(w) = (q-1) * C(n, w) * sum_{j=0}^{w-d} (-1)^j * C(w-1, j) * q^(w-d-j)

and the same alternating sum, with C(n, w) replaced by a product of
per-block binomials, counts words with a prescribed weight profile over a
partition of the coordinates.  Everything here is exact integer arithmetic;
the alternating sum must cancel exactly, so no floats are ever involved.

Each closed form is paired with a brute-force scan over the code, which is
the independent oracle the formulas are verified against.  The stated
hypothesis of the closed forms is q >= k; evaluating them with q < k emits
an OutOfStatedRegime warning so callers can record empirical agreement
without claiming a theorem.
"""

import warnings
from math import comb

from .codes import hamming_distance, weight
from .errors import (
    BadPartition,
    InadmissibleParameters,
    InvalidParameters,
    OutOfStatedRegime,
    ProfileOutOfRange,
    WordNotInCode,
    ZeroWordAbsent,
)


class WeightDistribution:
    """Counts per weight (or per distance); zero counts are dropped."""

    def __init__(self, n, counts):
        clean = {}
        for w in sorted(counts):
            c = counts[w]
            if not (0 <= w <= n):
                raise InvalidParameters(f"weight {w} outside 0..{n}")
            if c < 0:
                raise InvalidParameters(f"negative count at weight {w}")
            if c:
                clean[w] = c
        self.n = n
        self.counts = clean

    def __getitem__(self, w):
        return self.counts.get(w, 0)

    def __eq__(self, other):
        return (isinstance(other, WeightDistribution)
                and other.n == self.n and other.counts == self.counts)

    def __repr__(self):
        return f"WeightDistribution(n={self.n}, {self.counts})"

    def items(self):
        return list(self.counts.items())

    def total(self):
        return sum(self.counts.values())

    def spectrum(self):
        """The set of attained nonzero weights."""
        return {w for w in self.counts if w > 0}


def weight_distribution_bruteforce(code):
    """Exact weight counts by scanning every codeword."""
    counts = {}
    for w in code.words:
        wt = weight(w)
        counts[wt] = counts.get(wt, 0) + 1
    return WeightDistribution(code.n, counts)


def _alternating_sum(w, d, q):
    """sum_{j=0}^{w-d} (-1)^j C(w-1, j) q^(w-d-j), exact."""
    return sum((-1) ** j * comb(w - 1, j) * q ** (w - d - j)
               for j in range(w - d + 1))


def _check_mds_params(n, k, q):
    if q < 2 or n < 1 or not 0 <= k <= n:
        raise InvalidParameters(f"bad MDS parameters (n={n}, k={k}, q={q})")
    if q < k:
        warnings.warn(OutOfStatedRegime(
            f"closed form stated for q >= k; got q={q} < k={k}"))


def weight_distribution_formula(n, k, q):
    """Closed-form weight distribution of an (n, k)_q MDS code containing
    the zero word: E(0)=1, E(w)=0 below d, the alternating sum above d."""
    _check_mds_params(n, k, q)
    d = n - k + 1
    counts = {0: 1}
    for w in range(d, n + 1):
        counts[w] = (q - 1) * comb(n, w) * _alternating_sum(w, d, q)
    return WeightDistribution(n, counts)


def weight_spectrum(code):
    """Set of nonzero weights attained; the code must contain the zero word."""
    if not code.contains_zero():
        raise ZeroWordAbsent("weight spectrum is defined relative to the zero word")
    return {weight(w) for w in code.words if any(w)}


def predicted_spectrum(n, k, q):
    """The provable weight spectrum of any (n, k)_q MDS code containing the
    zero word.  Case rules:

      k = 1            -> {n}
      n = k            -> {1, .., n}
      q = 2, n = k+1   -> the even weights in (1, n]
      n < q+k-1        -> {n-k+1, .., n}
      n = q+k-1, k = 2 -> {n-1}
      n = q+k-1, k,q>2 -> {n-k+1, .., n} minus {n-k+2}  (= q+1 missing)
    """
    if k < 1 or n < k or q < 2:
        raise InadmissibleParameters(f"(n={n}, k={k}, q={q}) is not a code shape")
    if k > 1 and n > q + k - 1:
        raise InadmissibleParameters(f"no (n={n}, k={k})_{q} MDS code: n > q+k-1")
    if q <= k and n > k + 1:
        raise InadmissibleParameters(f"no (n={n}, k={k})_{q} MDS code: q <= k forces n <= k+1")
    if k == 1:
        return {n}
    if n == k:
        return set(range(1, n + 1))
    if q == 2:
        # here n = k+1: the binary parity-check case
        return {t for t in range(2, n + 1, 2)}
    if n < q + k - 1:
        return set(range(n - k + 1, n + 1))
    if k == 2:
        return {n - 1}
    return set(range(n - k + 1, n + 1)) - {n - k + 2}


# ------------------------------------------------- partition enumerators

class PartitionSpec:
    """Disjoint blocks of coordinate positions covering 0..n-1."""

    def __init__(self, n, blocks):
        blocks = tuple(frozenset(b) for b in blocks)
        if any(not b for b in blocks):
            raise BadPartition("empty block")
        covered = [p for b in blocks for p in b]
        if len(covered) != n or set(covered) != set(range(n)):
            raise BadPartition(f"blocks do not partition 0..{n - 1}")
        self.n = n
        self.blocks = blocks
        self.sizes = tuple(len(b) for b in blocks)

    def __len__(self):
        return len(self.blocks)

    def __repr__(self):
        return f"PartitionSpec(n={self.n}, sizes={self.sizes})"


def _check_profile(spec, profile):
    profile = tuple(profile)
    if len(profile) != len(spec.blocks):
        raise ProfileOutOfRange(
            f"profile has {len(profile)} entries for {len(spec.blocks)} blocks")
    for wi, ni in zip(profile, spec.sizes):
        if not 0 <= wi <= ni:
            raise ProfileOutOfRange(f"profile entry {wi} outside 0..{ni}")
    return profile


def partition_weight_enumerator_formula(n, k, q, spec, profile):
    """Closed-form count of codewords whose support meets block i in exactly
    profile[i] positions, for an MDS code containing the zero word."""
    if spec.n != n:
        raise BadPartition(f"partition covers {spec.n} positions, code length is {n}")
    _check_mds_params(n, k, q)
    profile = _check_profile(spec, profile)
    w = sum(profile)
    d = n - k + 1
    if w == 0:
        return 1
    if w < d:
        return 0
    factor = q - 1
    for wi, ni in zip(profile, spec.sizes):
        factor *= comb(ni, wi)
    return factor * _alternating_sum(w, d, q)


def partition_weight_enumerator_bruteforce(code, spec, profile):
    """Exact profile count by scanning codewords."""
    if spec.n != code.n:
        raise BadPartition(f"partition covers {spec.n} positions, code length is {code.n}")
    profile = _check_profile(spec, profile)
    count = 0
    for word in code.words:
        if all(sum(word[p] != 0 for p in block) == wi
               for block, wi in zip(spec.blocks, profile)):
            count += 1
    return count


# ------------------------------------------------- distance spectra

def distance_distribution_from(code, center):
    """Counts of codewords at each distance from a chosen codeword."""
    center = tuple(center)
    if center not in code.words:
        raise WordNotInCode(f"{center} is not a codeword")
    counts = {}
    for w in code.words:
        t = hamming_distance(w, center)
        counts[t] = counts.get(t, 0) + 1
    return WeightDistribution(code.n, counts)


def partition_distance_enumerator(code, center, spec, profile):
    """Count codewords differing from `center` in exactly profile[i]
    positions inside block i, for each block."""
    center = tuple(center)
    if center not in code.words:
        raise WordNotInCode(f"{center} is not a codeword")
    if spec.n != code.n:
        raise BadPartition(f"partition covers {spec.n} positions, code length is {code.n}")
    profile = _check_profile(spec, profile)
    count = 0
    for word in code.words:
        if all(sum(word[p] != center[p] for p in block) == wi
               for block, wi in zip(spec.blocks, profile)):
            count += 1
    return count
