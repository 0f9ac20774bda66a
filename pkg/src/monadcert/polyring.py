"""Sparse multi-homogeneous polynomials and matrices of forms, with rank tooling.

Variables live in per-factor blocks over a product of projective spaces.
Matrices carry per-row/per-column multidegree labels; nonzero entries of a
well-labeled matrix have multidegree row_label - col_label.  Rank support is
twofold, mirroring how such matrices are argued about: exact triangular
witnesses (symbolic, pointwise-sound) and randomized evaluation over a large
prime field.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .space import MultiDegree

Monomial = tuple[int, ...]

DEFAULT_PRIME = 2147483629  # largest prime below 2^31 - 16; fits 31-bit-safe arithmetic
DEFAULT_TRIALS = 20

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_probable_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for n < 3.3e24 (fixed base set)."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class CoordinateRing:
    """Coordinate ring of prod P^{n_i}: one block of n_i+1 variables per factor."""

    def __init__(self, factors: Sequence[int], letters: Sequence[str] | None = None):
        self.factors = tuple(int(n) for n in factors)
        if not self.factors or any(n < 1 for n in self.factors):
            raise ValueError(f"factor dimensions must be >= 1, got {self.factors}")
        if letters is None:
            letters = tuple(f"a{i + 1}_" for i in range(len(self.factors)))
        letters = tuple(letters)
        if len(letters) != len(self.factors):
            raise ValueError("one letter prefix per factor required")
        self.letters = letters
        offsets = []
        off = 0
        for n in self.factors:
            offsets.append(off)
            off += n + 1
        self.offsets = tuple(offsets)
        self.nvars = off
        names: list[str] = []
        var_factor: list[int] = []
        for i, n in enumerate(self.factors):
            for j in range(n + 1):
                names.append(f"{letters[i]}{j}")
                var_factor.append(i)
        self.var_names = tuple(names)
        self.var_factor = tuple(var_factor)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, CoordinateRing)
            and self.factors == other.factors
            and self.letters == other.letters
        )

    def __hash__(self) -> int:
        return hash((self.factors, self.letters))

    def var_index(self, factor: int, j: int) -> int:
        if not 0 <= factor < len(self.factors):
            raise ValueError(f"no factor {factor}")
        if not 0 <= j <= self.factors[factor]:
            raise ValueError(f"factor {factor} has no coordinate {j}")
        return self.offsets[factor] + j

    def unit_monomial(self, picks: Iterable[tuple[int, int]]) -> Monomial:
        """Monomial choosing one coordinate per listed (factor, index) pair."""
        exps = [0] * self.nvars
        for factor, j in picks:
            exps[self.var_index(factor, j)] += 1
        return tuple(exps)

    def variable(self, factor: int, j: int) -> "SparsePoly":
        exps = [0] * self.nvars
        exps[self.var_index(factor, j)] = 1
        return SparsePoly(self, {tuple(exps): 1})

    def zero(self) -> "SparsePoly":
        return SparsePoly(self, {})

    def one(self) -> "SparsePoly":
        return SparsePoly(self, {(0,) * self.nvars: 1})

    def multidegree(self, mono: Monomial) -> MultiDegree:
        out = []
        for i, n in enumerate(self.factors):
            off = self.offsets[i]
            out.append(sum(mono[off : off + n + 1]))
        return tuple(out)

    def monomial_str(self, mono: Monomial) -> str:
        parts = []
        for i, e in enumerate(mono):
            if e == 1:
                parts.append(self.var_names[i])
            elif e > 1:
                parts.append(f"{self.var_names[i]}^{e}")
        return "*".join(parts) if parts else "1"


class SparsePoly:
    """Polynomial as a map monomial -> nonzero integer coefficient."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: CoordinateRing, terms: Mapping[Monomial, int]):
        self.ring = ring
        self.terms = {m: c for m, c in terms.items() if c}  # never store zeros

    def is_zero(self) -> bool:
        return not self.terms

    def multidegree(self) -> MultiDegree | None:
        """Common multidegree of all monomials; None for the zero polynomial."""
        if not self.terms:
            return None
        degs = {self.ring.multidegree(m) for m in self.terms}
        if len(degs) > 1:
            raise ValueError(f"not multi-homogeneous: degrees {sorted(degs)}")
        return degs.pop()

    def _check(self, other: "SparsePoly") -> None:
        if self.ring != other.ring:
            raise ValueError("polynomials from different rings")

    def __add__(self, other: "SparsePoly") -> "SparsePoly":
        self._check(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = terms.get(m, 0) + c
        return SparsePoly(self.ring, terms)

    def __neg__(self) -> "SparsePoly":
        return SparsePoly(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "SparsePoly") -> "SparsePoly":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return SparsePoly(self.ring, {m: c * other for m, c in self.terms.items()})
        self._check(other)
        terms: dict[Monomial, int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                terms[m] = terms.get(m, 0) + c1 * c2
        return SparsePoly(self.ring, terms)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "SparsePoly":
        if e < 0:
            raise ValueError("negative power")
        out = self.ring.one()
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SparsePoly)
            and self.ring == other.ring
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.ring, tuple(sorted(self.terms.items()))))

    def eval_mod(self, point: Sequence[int], p: int) -> int:
        total = 0
        for mono, coeff in self.terms.items():
            v = coeff % p
            for i, e in enumerate(mono):
                if e:
                    v = v * pow(point[i], e, p) % p
            total = (total + v) % p
        return total

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for mono, coeff in sorted(self.terms.items()):
            ms = self.ring.monomial_str(mono)
            if coeff == 1 and ms != "1":
                bits.append(ms)
            elif coeff == -1 and ms != "1":
                bits.append(f"-{ms}")
            elif ms == "1":
                bits.append(str(coeff))
            else:
                bits.append(f"{coeff}*{ms}")
        out = " + ".join(bits)
        return out.replace("+ -", "- ")

    __repr__ = __str__


class MonadMatrix:
    """Matrix of forms with declared row/column multidegree labels.

    Convention: rows index the target summands, columns the source summands,
    so a nonzero entry at (r, c) should have multidegree
    row_labels[r] - col_labels[c].
    """

    def __init__(
        self,
        ring: CoordinateRing,
        entries: Sequence[Sequence[SparsePoly]],
        row_labels: Sequence[Sequence[int]],
        col_labels: Sequence[Sequence[int]],
    ):
        self.ring = ring
        self.entries = tuple(tuple(row) for row in entries)
        self.row_labels = tuple(tuple(int(x) for x in lab) for lab in row_labels)
        self.col_labels = tuple(tuple(int(x) for x in lab) for lab in col_labels)
        if len(self.entries) != len(self.row_labels):
            raise ValueError("one label per row required")
        ncols = len(self.col_labels)
        for row in self.entries:
            if len(row) != ncols:
                raise ValueError("ragged rows / label count mismatch")
            for e in row:
                if e.ring != ring:
                    raise ValueError("entry from a different ring")
        l = len(ring.factors)
        for lab in self.row_labels + self.col_labels:
            if len(lab) != l:
                raise ValueError(f"label {lab} has wrong length, expected {l}")

    @property
    def nrows(self) -> int:
        return len(self.entries)

    @property
    def ncols(self) -> int:
        return len(self.col_labels)

    def entry(self, r: int, c: int) -> SparsePoly:
        return self.entries[r][c]

    def is_zero(self) -> bool:
        return all(e.is_zero() for row in self.entries for e in row)

    def degree_mismatches(self) -> tuple[tuple[int, int, MultiDegree, MultiDegree], ...]:
        """Nonzero entries whose multidegree differs from row - col label.

        Inhomogeneous entries are reported with their monomials' degree set
        collapsed to the first offender.
        """
        bad = []
        for r, rl in enumerate(self.row_labels):
            for c, cl in enumerate(self.col_labels):
                e = self.entries[r][c]
                if e.is_zero():
                    continue
                expected = tuple(a - b for a, b in zip(rl, cl))
                try:
                    found = e.multidegree()
                except ValueError:
                    found = self.ring.multidegree(next(iter(e.terms)))
                if found != expected:
                    bad.append((r, c, found, expected))
        return tuple(bad)

    @property
    def degree_consistent(self) -> bool:
        return not self.degree_mismatches()

    def eval_mod(self, point: Sequence[int], p: int) -> list[list[int]]:
        return [[e.eval_mod(point, p) for e in row] for row in self.entries]


def mat_mul(m1: MonadMatrix, m2: MonadMatrix) -> MonadMatrix:
    """Exact symbolic product; inner dimensions and inner labels must agree."""
    if m1.ring != m2.ring:
        raise ValueError("matrices over different rings")
    if m1.ncols != m2.nrows:
        raise ValueError(f"inner dimension mismatch: {m1.ncols} vs {m2.nrows}")
    if m1.col_labels != m2.row_labels:
        raise ValueError("inner labels mismatch")
    ring = m1.ring
    out = []
    for r in range(m1.nrows):
        row = []
        for c in range(m2.ncols):
            acc = ring.zero()
            for t in range(m1.ncols):
                a = m1.entries[r][t]
                b = m2.entries[t][c]
                if a.is_zero() or b.is_zero():
                    continue
                acc = acc + a * b
            row.append(acc)
        out.append(row)
    return MonadMatrix(ring, out, m1.row_labels, m2.col_labels)


def is_zero(m: MonadMatrix) -> bool:
    return m.is_zero()


# ---------------------------------------------------------------------------
# randomized rank evidence

def _rank_mod(rows: list[list[int]], p: int) -> int:
    rows = [r[:] for r in rows]
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    rank = 0
    col = 0
    while rank < nrows and col < ncols:
        pivot = None
        for r in range(rank, nrows):
            if rows[r][col] % p:
                pivot = r
                break
        if pivot is None:
            col += 1
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = pow(rows[rank][col], p - 2, p)
        rows[rank] = [x * inv % p for x in rows[rank]]
        for r in range(nrows):
            if r != rank and rows[r][col] % p:
                f = rows[r][col]
                rows[r] = [(x - f * y) % p for x, y in zip(rows[r], rows[rank])]
        rank += 1
        col += 1
    return rank


@dataclass(frozen=True)
class RankEvidence:
    max_rank_seen: int
    trials: int
    prime: int
    seed: int
    ranks: tuple[int, ...]
    points: tuple[tuple[tuple[int, ...], ...], ...]  # trial -> factor -> coords


def rank_at_random_points(
    m: MonadMatrix,
    prime: int = DEFAULT_PRIME,
    trials: int = DEFAULT_TRIALS,
    seed: int = 0,
) -> RankEvidence:
    """Max rank of the matrix evaluated at random points, exactly mod prime.

    Each factor's coordinate tuple is sampled with the all-zero tuple
    rejected, so every sample is a genuine point of the product space.
    Deterministic for a fixed seed.
    """
    if not is_probable_prime(prime):
        raise ValueError(f"{prime} is not prime")
    if prime < 2 ** 20:
        raise ValueError(f"prime {prime} too small, need >= 2^20")
    if trials < 1:
        raise ValueError("trials must be >= 1")
    rng = random.Random(seed)
    ranks = []
    points = []
    for _ in range(trials):
        factor_tuples = []
        for n in m.ring.factors:
            for _attempt in range(64):
                tup = tuple(rng.randrange(prime) for _ in range(n + 1))
                if any(tup):
                    break
            else:
                raise RuntimeError("degenerate point generation")
            factor_tuples.append(tup)
        flat = [x for tup in factor_tuples for x in tup]
        ranks.append(_rank_mod(m.eval_mod(flat, prime), prime))
        points.append(tuple(factor_tuples))
    return RankEvidence(
        max_rank_seen=max(ranks),
        trials=trials,
        prime=prime,
        seed=seed,
        ranks=tuple(ranks),
        points=tuple(points),
    )


# ---------------------------------------------------------------------------
# triangular witnesses

@dataclass(frozen=True)
class WitnessSymbol:
    """A named monomial usable on a witness diagonal.

    Symbols come in ordered families with the covering property that at every
    point of the space at least one family member is nonzero (all coordinates
    of one factor, or all Segre coordinates).
    """

    name: str
    monomial: Monomial


@dataclass(frozen=True)
class TriangularWitness:
    """A k x k submatrix triangular at every point of the certified locus.

    rows/cols are listed in diagonal order.  Diagonal entries are pure powers
    of `symbol`; entries below the diagonal are identically zero or pure
    powers of family symbols strictly earlier than `symbol` (the `guards`).
    At any point where the guards vanish and the symbol does not, the
    determinant is a unit times a power of the symbol, so rank >= k there.
    `strict` means no guards were needed: rank >= k wherever symbol != 0.
    """

    symbol: str
    rows: tuple[int, ...]
    cols: tuple[int, ...]
    strict: bool
    guards: tuple[str, ...]


def _pure_power(poly: SparsePoly, base: Monomial) -> int | None:
    # single term c * base^e with e >= 1, any nonzero integer c
    if len(poly.terms) != 1:
        return None
    mono = next(iter(poly.terms))
    i0 = next((i for i, b in enumerate(base) if b), None)
    if i0 is None:
        return None
    e, rem = divmod(mono[i0], base[i0])
    if rem or e < 1:
        return None
    if mono != tuple(e * b for b in base):
        return None
    return e


def triangular_witness(
    m: MonadMatrix,
    symbol: WitnessSymbol,
    k: int,
    family: Sequence[WitnessSymbol],
) -> TriangularWitness | None:
    """Search for a k x k guarded-triangular submatrix with `symbol` on the diagonal.

    `family` is the ordered symbol list `symbol` belongs to; entries below the
    diagonal may be pure powers of earlier family members (recorded as guards).
    Returns None when no witness exists (e.g. the zero matrix).
    """
    if k < 1 or k > min(m.nrows, m.ncols):
        raise ValueError(f"target rank {k} out of range for {m.nrows}x{m.ncols}")
    names = [s.name for s in family]
    try:
        s_idx = names.index(symbol.name)
    except ValueError:
        raise ValueError(f"symbol {symbol.name} not in family {names}") from None
    earlier = family[:s_idx]

    def guard_of(poly: SparsePoly) -> tuple[bool, str | None]:
        if poly.is_zero():
            return True, None
        for s in earlier:
            if _pure_power(poly, s.monomial) is not None:
                return True, s.name
        return False, None

    positions = [
        (r, c)
        for r in range(m.nrows)
        for c in range(m.ncols)
        if _pure_power(m.entries[r][c], symbol.monomial) is not None
    ]
    if len(positions) < k:
        return None

    chosen: list[tuple[int, int]] = []
    guards: list[str] = []

    def extend(start: int) -> bool:
        if len(chosen) == k:
            return True
        for i in range(start, len(positions)):
            r, c = positions[i]
            if any(r == ra or c == ca for ra, ca in chosen):
                continue
            # the new pair becomes the next diagonal element; entries under it
            # sit in the earlier diagonal columns
            new_guards = []
            ok = True
            for _, ca in chosen:
                good, g = guard_of(m.entries[r][ca])
                if not good:
                    ok = False
                    break
                if g is not None:
                    new_guards.append(g)
            if not ok:
                continue
            chosen.append((r, c))
            guards.extend(new_guards)
            if extend(i + 1):
                return True
            chosen.pop()
            for _ in new_guards:
                guards.pop()
        return False

    if not extend(0):
        return None
    rows = tuple(r for r, _ in chosen)
    cols = tuple(c for _, c in chosen)
    dedup = tuple(sorted(set(guards), key=names.index))
    return TriangularWitness(
        symbol=symbol.name, rows=rows, cols=cols, strict=not dedup, guards=dedup
    )
