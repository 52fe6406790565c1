"""Jordan type of multiplication by a generic linear form, from ranks alone.

e(i, j) counts the strings of length j starting in degree i; summing over i
gives the multiplicity of the part j in the Jordan partition.  Both the
cell-by-cell formula and the parity-split closed form for e_j are computed
and asserted equal on every call, so any divergence between the two
derivations surfaces immediately instead of corrupting results.
"""

from dataclasses import dataclass

from agjordan.apolarity import GradedAlgebraBasis
from agjordan.errors import (
    DegenerateLinearForm,
    InternalInconsistency,
    InvalidRankProfile,
    NonGenericRankTable,
)
from agjordan.hessian import RankTable, rank_table_at
from agjordan.poly import LinearForm, evaluate


class Partition:
    """Non-increasing positive parts, rendered with multiplicities."""

    __slots__ = ("parts",)

    def __init__(self, parts):
        parts = tuple(sorted((int(p) for p in parts), reverse=True))
        if parts and parts[-1] < 1:
            raise ValueError("parts must be positive")
        self.parts = parts

    @classmethod
    def from_multiplicities(cls, pairs):
        parts = []
        for part, mult in pairs:
            if mult < 0:
                raise ValueError("negative multiplicity")
            parts.extend([part] * mult)
        return cls(parts)

    def multiplicities(self):
        """[(part, count)] with parts descending."""
        out = []
        for p in self.parts:
            if out and out[-1][0] == p:
                out[-1][1] += 1
            else:
                out.append([p, 1])
        return [(p, c) for p, c in out]

    @property
    def total(self) -> int:
        return sum(self.parts)

    @property
    def num_parts(self) -> int:
        return len(self.parts)

    def render(self) -> str:
        if not self.parts:
            return "0"
        return " + ".join(f"{p}^{c}" for p, c in self.multiplicities())

    def to_json(self):
        return [[p, c] for p, c in self.multiplicities()]

    def __eq__(self, other):
        if not isinstance(other, Partition):
            return NotImplemented
        return self.parts == other.parts

    def __hash__(self):
        return hash(self.parts)

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"Partition({self.render()!r})"


@dataclass(frozen=True)
class EijTable:
    socle_degree: int
    e: dict

    def get(self, i: int, j: int) -> int:
        return self.e.get((i, j), 0)

    def cells(self):
        """Sorted ((i, j), count) with zero cells dropped."""
        return sorted(((k, v) for k, v in self.e.items() if v))


@dataclass(frozen=True)
class JordanTypeReport:
    hilbert: tuple
    rank_table: RankTable
    eij: EijTable
    jordan: Partition
    hilbert_dual: Partition


def eij_table(rt: RankTable) -> EijTable:
    """e(i, j) = r(i, j-1) - r(i, j) - r(i-1, j) + r(i-1, j+1).

    A negative cell or a break of the mirror symmetry e(i, j) =
    e(d-i-j+1, j) certifies that the table is not a generic rank profile.
    """
    d = rt.socle_degree
    g = rt.get
    e = {}
    for j in range(1, d + 2):
        for i in range(0, d + 1):
            v = g(i, j - 1) - g(i, j) - g(i - 1, j) + g(i - 1, j + 1)
            if v < 0:
                raise NonGenericRankTable(i, j, v)
            e[(i, j)] = v
    for (i, j), v in e.items():
        mirror = e.get((d - i - j + 1, j), 0)
        if v != mirror:
            raise NonGenericRankTable(
                i, j, v,
                message=f"string counts break symmetry: e({i},{j}) = {v} but "
                        f"e({d - i - j + 1},{j}) = {mirror}",
            )
    # kernel-sum identity: strings through degree i dying within j steps,
    # minus those continuing an earlier string, with k_i^j = h_i - r(i, j)
    def kdim(i, j):
        return (rt.hilbert[i] if 0 <= i <= d else 0) - g(i, j)

    for i in range(0, d + 1):
        for j in range(1, d + 2):
            lhs = sum(e[(i, s)] for s in range(1, j + 1))
            rhs = kdim(i, j) - kdim(i - 1, j + 1) + kdim(i - 1, 1)
            if lhs != rhs:
                raise InternalInconsistency(
                    f"kernel-sum identity fails at (i, j) = ({i}, {j}): "
                    f"{lhs} != {rhs}"
                )
    return EijTable(socle_degree=d, e=e)


def ej_closed_form(rt: RankTable, j: int) -> int:
    """Total count of length-j strings straight from the rank table.

    Split on the parity of d - j; e_d = 0 and e_{d+1} = 1 need no
    computation (the full string of length d+1 is always there, and the
    mirror symmetry rules out length d).
    """
    d = rt.socle_degree
    if j == d + 1:
        return 1
    if j == d:
        return 0
    if not 1 <= j < d:
        raise ValueError(f"j must lie in 1..{d + 1}, got {j}")
    g = rt.get
    m, odd = divmod(d - j, 2)
    total = (
        2 * sum(g(s, j - 1) for s in range(m + 1))
        - 4 * sum(g(s, j) for s in range(m + 1))
    )
    if odd:
        total += 2 * sum(g(s, j + 1) for s in range(m + 1))
        total += g(m + 1, j - 1) - g(m, j + 1)
    else:
        total += 2 * sum(g(s, j + 1) for s in range(m))
        total += 2 * g(m, j)
    return total


def jordan_type(rt: RankTable) -> JordanTypeReport:
    """Assemble the Jordan partition from the rank table, with self-checks."""
    eij = eij_table(rt)
    d = rt.socle_degree
    mults = []
    for j in range(1, d + 2):
        ej = sum(eij.get(i, j) for i in range(d + 1))
        closed = ej_closed_form(rt, j)
        if ej != closed:
            raise InternalInconsistency(
                f"string count e_{j}: cell sum {ej} vs closed form {closed}"
            )
        if ej:
            mults.append((j, ej))
    jordan = Partition.from_multiplicities(mults)
    dim = sum(rt.hilbert)
    if jordan.total != dim:
        raise InternalInconsistency(
            f"partition totals {jordan.total}, but dim A = {dim}"
        )
    return JordanTypeReport(
        hilbert=rt.hilbert,
        rank_table=rt,
        eij=eij,
        jordan=jordan,
        hilbert_dual=dual_partition(Partition(rt.hilbert)),
    )


def jordan_type_at(basis: GradedAlgebraBasis, l: LinearForm) -> JordanTypeReport:
    """Jordan type at one explicit linear form (f must not vanish at l_perp)."""
    point = l.point()
    if len(point) != basis.num_vars:
        raise ValueError(
            f"linear form has {len(point)} coefficients, expected {basis.num_vars}"
        )
    if evaluate(basis.f, point) == 0:
        raise DegenerateLinearForm(
            "f vanishes at the point of the given linear form; Jordan types on "
            "the hypersurface f = 0 follow a different algorithm and are not "
            "supported"
        )
    return jordan_type(rank_table_at(basis, point))


def dual_partition(p: Partition) -> Partition:
    """Conjugate: transpose the Ferrer diagram."""
    if not p.parts:
        return Partition(())
    return Partition(
        sum(1 for q in p.parts if q >= m) for m in range(1, p.parts[0] + 1)
    )


def partition_leq(p: Partition, q: Partition) -> bool:
    """Dominance-style order: more parts means smaller; ties compare the
    first differing part, smaller part first."""
    if p.total != q.total:
        raise ValueError("partitions compare only within the same total")
    if p.parts == q.parts:
        return True
    if p.num_parts != q.num_parts:
        return p.num_parts > q.num_parts
    for a, b in zip(p.parts, q.parts):
        if a != b:
            return a < b
    return True


def _profile(pairs):
    for name, value in pairs:
        if value < 0:
            raise InvalidRankProfile(f"multiplicity of part {name} is {value} < 0")
    return Partition.from_multiplicities(pairs)


def closed_form_d3(n: int, r: int) -> Partition:
    """Socle degree 3, Hilbert (1, n, n, 1), r = generic rank of Hess^1."""
    if not 1 <= r <= n:
        raise InvalidRankProfile(f"need 1 <= r <= n, got r={r}, n={n}")
    return _profile([(4, 1), (2, r - 1), (1, 2 * (n - r))])


def closed_form_d4(n: int, a: int, r: int, s: int) -> Partition:
    """Socle degree 4, Hilbert (1, n, a, n, 1), r = r(1,2), s = r(1,1)."""
    if not 1 <= r <= s <= min(n, a):
        raise InvalidRankProfile(
            f"need 1 <= r <= s <= min(n, a), got r={r}, s={s}, n={n}, a={a}"
        )
    return _profile([(5, 1), (3, r - 1), (2, 2 * (s - r)), (1, 2 * n + a - 4 * s + r)])


def closed_form_d5(n: int, a: int, r: int, p: int, q: int, s: int) -> Partition:
    """Socle degree 5, Hilbert (1, n, a, a, n, 1); r = r(1,3), p = r(1,2),
    q = r(2,1), s = r(1,1)."""
    if not 1 <= r <= p <= s <= n:
        raise InvalidRankProfile(
            f"need 1 <= r <= p <= s <= n, got r={r}, p={p}, s={s}, n={n}"
        )
    return _profile([
        (6, 1),
        (4, r - 1),
        (3, 2 * (p - r)),
        (2, 2 * s - 4 * p + q + r),
        (1, 2 * n + 2 * a - 4 * s - 2 * q + 2 * p),
    ])
