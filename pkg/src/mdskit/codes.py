"""Core code model: words, distances, MDS verification, file I/O.

A code is a set of exactly q^k distinct length-n words over the alphabet
{0, .., q-1}.  The alphabet carries no algebra here; field structure only
enters through the construction helpers.  Codewords are plain tuples of
ints and codes are value-immutable, so every transform returns a new Code
and equivalence chains stay auditable.

Code file format (text, UTF-8, LF):
    line 1:   MDSKIT v1
    line 2:   q=<int> n=<int>
    lines 3+: one codeword per line, n space-separated symbols.
The parser rejects duplicate words, wrong arity, out-of-range symbols, and
word counts that are not a power of q.
"""

from dataclasses import dataclass

from .errors import (
    BadPositions,
    CodeFileError,
    InvalidCode,
    LengthMismatch,
    TooFewWords,
)

Word = tuple


def hamming_distance(a, b):
    """Number of coordinates in which a and b differ."""
    if len(a) != len(b):
        raise LengthMismatch(f"lengths {len(a)} and {len(b)} differ")
    return sum(x != y for x, y in zip(a, b))


def weight(c):
    """Number of nonzero coordinates, i.e. distance from the zero word."""
    return sum(x != 0 for x in c)


def _dimension_of(q, count):
    k = 0
    total = 1
    while total < count:
        total *= q
        k += 1
    return k if total == count else None


class Code:
    """An (n, k)_q code: a frozen set of q^k distinct words of length n."""

    def __init__(self, q, words):
        if q < 2:
            raise InvalidCode(f"alphabet size q={q} must be at least 2")
        wordset = frozenset(tuple(w) for w in words)
        if not wordset:
            raise InvalidCode("code has no words")
        n = len(next(iter(wordset)))
        for w in wordset:
            if len(w) != n:
                raise InvalidCode("words have mixed lengths")
            for s in w:
                if not (isinstance(s, int) and 0 <= s < q):
                    raise InvalidCode(f"symbol {s!r} outside 0..{q - 1}")
        k = _dimension_of(q, len(wordset))
        if k is None:
            raise InvalidCode(f"{len(wordset)} words is not a power of q={q}")
        self.q = q
        self.n = n
        self.k = k
        self.words = wordset

    @property
    def zero(self):
        return (0,) * self.n

    def contains_zero(self):
        return self.zero in self.words

    def sorted_words(self):
        return sorted(self.words)

    def __contains__(self, word):
        return tuple(word) in self.words

    def __len__(self):
        return len(self.words)

    def __iter__(self):
        return iter(self.sorted_words())

    def __eq__(self, other):
        return (isinstance(other, Code)
                and other.q == self.q and other.words == self.words)

    def __hash__(self):
        return hash((self.q, self.words))

    def __repr__(self):
        return f"Code((n={self.n}, k={self.k})_{self.q}, {len(self.words)} words)"


@dataclass(frozen=True)
class MdsReport:
    is_mds: bool
    d: int
    singleton_bound: int


def min_distance(code):
    """Minimum pairwise distance, by full pairwise scan."""
    if len(code.words) < 2:
        raise TooFewWords("minimum distance needs at least two words")
    words = code.sorted_words()
    best = code.n
    for i, a in enumerate(words):
        for b in words[i + 1:]:
            dist = hamming_distance(a, b)
            if dist < best:
                best = dist
                if best == 1:
                    return 1
    return best


def is_mds(code):
    """Check d = n - k + 1; the report carries d and the Singleton bound."""
    d = min_distance(code)
    bound = code.n - code.k + 1
    report = MdsReport(is_mds=(d == bound), d=d, singleton_bound=bound)
    if report.is_mds:
        # Length bounds that every MDS code provably satisfies.
        assert code.k <= 1 or code.n <= code.q + code.k - 1
        assert code.q > code.k or code.n <= code.k + 1
    return report


def information_set_check(code, positions):
    """True iff projecting onto the positions hits every k-tuple exactly once."""
    pos = tuple(positions)
    if len(pos) != code.k or len(set(pos)) != len(pos):
        raise BadPositions(f"need exactly k={code.k} distinct positions")
    if any(not (0 <= p < code.n) for p in pos):
        raise BadPositions(f"positions must lie in 0..{code.n - 1}")
    seen = {tuple(w[p] for p in pos) for w in code.words}
    return len(seen) == len(code.words)


# ---------------------------------------------------------------- file I/O

_MAGIC = "MDSKIT v1"


def format_code(code):
    """Render a code in the file format, words in lexicographic order."""
    lines = [_MAGIC, f"q={code.q} n={code.n}"]
    lines.extend(" ".join(str(s) for s in w) for w in code.sorted_words())
    return "\n".join(lines) + "\n"


def write_code(code, path):
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(format_code(code))


def parse_code(text):
    lines = text.splitlines()
    if not lines or lines[0] != _MAGIC:
        raise CodeFileError(f"missing '{_MAGIC}' header")
    if len(lines) < 2:
        raise CodeFileError("missing parameter line 'q=<int> n=<int>'")
    fields = lines[1].split()
    if (len(fields) != 2 or not fields[0].startswith("q=")
            or not fields[1].startswith("n=")):
        raise CodeFileError(f"bad parameter line: {lines[1]!r}")
    try:
        q = int(fields[0][2:])
        n = int(fields[1][2:])
    except ValueError:
        raise CodeFileError(f"bad parameter line: {lines[1]!r}") from None
    if q < 2 or n < 1:
        raise CodeFileError(f"need q >= 2 and n >= 1, got q={q} n={n}")

    words = []
    for lineno, line in enumerate(lines[2:], start=3):
        if not line.strip():
            continue
        try:
            word = tuple(int(tok) for tok in line.split())
        except ValueError:
            raise CodeFileError(f"line {lineno}: non-integer symbol") from None
        if len(word) != n:
            raise CodeFileError(f"line {lineno}: expected {n} symbols, got {len(word)}")
        if any(s < 0 or s >= q for s in word):
            raise CodeFileError(f"line {lineno}: symbol outside 0..{q - 1}")
        words.append(word)

    if len(set(words)) != len(words):
        raise CodeFileError("duplicate codewords")
    if _dimension_of(q, len(words)) is None:
        raise CodeFileError(f"{len(words)} words is not a power of q={q}")
    return Code(q, words)


def read_code(path):
    with open(path, "r", encoding="utf-8") as fh:
        return parse_code(fh.read())
