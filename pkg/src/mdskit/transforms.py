"""Equivalence moves, residual codes, and the binary classification.

Two codes over the same alphabet are equivalent when one maps onto the
other by permuting coordinate positions and independently permuting the
alphabet within each position.  Both kinds of move preserve pairwise
distances, hence (n, k, d).  The moves here are the generators:

    SP: apply a symbol permutation at one position
    PP: swap two positions

Any code is carried onto one containing the zero word by per-position
transpositions, which is what normalize_to_zero does.

A t-residual code fixes t coordinates of an MDS code to values that some
codeword attains, keeps the matching words, and deletes the fixed
positions; the result is an (n-t, k-t)_q MDS code.

Every binary MDS code is equivalent to a repetition code, the whole space,
or an even-weight (single parity check) code; classify_binary decides
which, and raises if a purported counterexample shows up.
"""

from dataclasses import dataclass
from enum import Enum

from .codes import Code, is_mds
from .errors import (
    BadMove,
    BadPositions,
    NotMds,
    TheoremViolation,
    TooManyPositions,
)


@dataclass(frozen=True)
class SP:
    """Relabel symbols at one position: symbol s becomes perm[s]."""
    position: int
    perm: tuple

    def __post_init__(self):
        object.__setattr__(self, "perm", tuple(self.perm))


@dataclass(frozen=True)
class PP:
    """Swap positions i and j."""
    i: int
    j: int


def _check_sp(move, code):
    if not 0 <= move.position < code.n:
        raise BadMove(f"position {move.position} outside 0..{code.n - 1}")
    if sorted(move.perm) != list(range(code.q)):
        raise BadMove(f"{move.perm} is not a permutation of 0..{code.q - 1}")


def apply_move(code, move):
    """Apply one SP or PP move, returning a new code."""
    if isinstance(move, SP):
        _check_sp(move, code)
        p = move.position
        words = [w[:p] + (move.perm[w[p]],) + w[p + 1:] for w in code.words]
    elif isinstance(move, PP):
        if not (0 <= move.i < code.n and 0 <= move.j < code.n):
            raise BadMove(f"positions ({move.i}, {move.j}) outside 0..{code.n - 1}")
        i, j = move.i, move.j
        words = []
        for w in code.words:
            w = list(w)
            w[i], w[j] = w[j], w[i]
            words.append(tuple(w))
    else:
        raise BadMove(f"unknown move {move!r}")
    return Code(code.q, words)


def apply_moves(code, moves):
    for move in moves:
        code = apply_move(code, move)
    return code


def transposition(q, a, b):
    """The permutation of 0..q-1 exchanging a and b."""
    perm = list(range(q))
    perm[a], perm[b] = perm[b], perm[a]
    return tuple(perm)


def normalize_to_zero(code, word=None):
    """Moves carrying `word` (default: the lexicographically least codeword)
    to the zero word.  Returns (new_code, moves)."""
    if word is None:
        word = min(code.words)
    else:
        word = tuple(word)
        if word not in code.words:
            raise BadMove(f"{word} is not a codeword")
    moves = [SP(p, transposition(code.q, s, 0))
             for p, s in enumerate(word) if s != 0]
    return apply_moves(code, moves), moves


def format_move(move):
    """One-line serialization; positions are 1-based on the wire."""
    if isinstance(move, SP):
        return f"SP {move.position + 1} {' '.join(str(s) for s in move.perm)}"
    if isinstance(move, PP):
        return f"PP {move.i + 1} {move.j + 1}"
    raise BadMove(f"unknown move {move!r}")


# ------------------------------------------------- residual codes

@dataclass(frozen=True)
class ResidualSpec:
    """Fix positions[i] to values[i], then delete those positions."""
    positions: tuple
    values: tuple

    def __post_init__(self):
        object.__setattr__(self, "positions", tuple(self.positions))
        object.__setattr__(self, "values", tuple(self.values))
        if len(self.positions) != len(self.values):
            raise BadPositions("positions and values differ in length")
        if len(set(self.positions)) != len(self.positions):
            raise BadPositions("repeated position")


def residual(code, spec):
    """The residual code: keep words matching the fixed values, delete the
    fixed positions.  Input must be MDS; output is (n-t, k-t)_q MDS."""
    report = is_mds(code)
    if not report.is_mds:
        raise NotMds(f"d={report.d} < {report.singleton_bound}")
    t = len(spec.positions)
    if t > code.k:
        raise TooManyPositions(f"cannot fix {t} positions with k={code.k}")
    for p in spec.positions:
        if not 0 <= p < code.n:
            raise BadPositions(f"position {p} outside 0..{code.n - 1}")
    for p, v in zip(spec.positions, spec.values):
        if not 0 <= v < code.q:
            raise BadPositions(f"value {v} at position {p} outside 0..{code.q - 1}")
    fixed = dict(zip(spec.positions, spec.values))
    kept = []
    for w in code.words:
        if all(w[p] == v for p, v in fixed.items()):
            kept.append(tuple(s for p, s in enumerate(w) if p not in fixed))
    out = Code(code.q, kept)
    if out.k > 0:
        # every residual of an MDS code is MDS; a failure here is a bug
        sub = is_mds(out)
        if not sub.is_mds:
            raise TheoremViolation(
                f"residual (n={out.n}, k={out.k})_{out.q} has d={sub.d}")
    return out


# ------------------------------------------------- binary classification

class BinaryKind(Enum):
    REPETITION = "repetition"
    UNIVERSE = "universe"
    PARITY_CHECK = "parity-check"


@dataclass(frozen=True)
class BinaryClass:
    kind: BinaryKind
    moves: tuple


def classify_binary(code):
    """Decide which of the three binary MDS shapes this code is equivalent
    to, returning the class and the normalizing moves."""
    if code.q != 2:
        raise NotMds(f"classification applies to q=2 only, got q={code.q}")
    report = is_mds(code)
    if not report.is_mds:
        raise NotMds(f"d={report.d} < {report.singleton_bound}")
    normalized, moves = normalize_to_zero(code)
    n, k = code.n, code.k
    if k == 1:
        kind = BinaryKind.REPETITION
        expected = {(0,) * n, (1,) * n}
    elif n == k:
        kind = BinaryKind.UNIVERSE
        expected = None
    elif n == k + 1:
        kind = BinaryKind.PARITY_CHECK
        expected = {w for w in normalized.words if sum(w) % 2 == 0}
        if len(expected) != len(normalized.words):
            raise TheoremViolation("normalized words are not all of even weight")
    else:
        raise TheoremViolation(f"binary MDS code with n={n}, k={k}")
    if expected is not None and normalized.words != frozenset(expected):
        raise TheoremViolation(f"(n={n}, k={k})_2 does not match {kind.value}")
    return BinaryClass(kind, tuple(moves))
