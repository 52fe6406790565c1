"""Generators for Perazzo forms and the gluing operations on them.

A Perazzo form is bidegree (1, d-1): f = x_1 g_1 + ... + x_n g_n with the
g_i in a separate, smaller set of u-variables.  These are the standard
source of vanishing Hessians, and the two combination operations below
(disjoint sum, and gluing along a shared corner term) move Hessian ranks
additively, which makes them good factories for rank-drop test families.
"""

from dataclasses import dataclass

from agjordan.linalg import QMatrix, rank
from agjordan.poly import Poly


@dataclass(frozen=True)
class BigradedForm:
    """f = sum x_i g_i with named x- and u-variables kept apart."""

    x_vars: tuple
    u_vars: tuple
    summands: tuple  # (x_index, Poly in u_vars) per x-variable, in order

    def __post_init__(self):
        object.__setattr__(self, "x_vars", tuple(self.x_vars))
        object.__setattr__(self, "u_vars", tuple(self.u_vars))
        object.__setattr__(self, "summands", tuple(self.summands))
        n, m = len(self.x_vars), len(self.u_vars)
        if n <= m:
            raise ValueError(
                f"need more x-variables than u-variables, got n={n}, m={m}"
            )
        degrees = set()
        for idx, g in self.summands:
            if not 0 <= idx < n:
                raise ValueError("summand index out of range")
            if g.var_names != self.u_vars:
                raise ValueError("summand polynomial not in the u-variables")
            if g.is_zero() or not g.is_homogeneous():
                raise ValueError("summands must be nonzero homogeneous forms")
            degrees.add(g.degree())
        if len({idx for idx, _ in self.summands}) != len(self.summands):
            raise ValueError("duplicate x-variable in summands")
        if len(degrees) != 1:
            raise ValueError("summands must share one degree")
        if not _independent([g for _, g in self.summands]):
            raise ValueError("summands must be linearly independent")

    @property
    def inner_degree(self) -> int:
        return self.summands[0][1].degree()

    def to_poly(self) -> Poly:
        names = self.x_vars + self.u_vars
        n = len(self.x_vars)
        terms = {}
        for idx, g in self.summands:
            for umono, c in g.terms.items():
                mono = [0] * n
                mono[idx] = 1
                key = tuple(mono) + umono
                terms[key] = terms.get(key, 0) + c
        return Poly(names, terms)


def _independent(gs) -> bool:
    monos = sorted({m for g in gs for m in g.terms})
    col = {m: j for j, m in enumerate(monos)}
    grid = [[0] * len(monos) for _ in gs]
    for r, g in enumerate(gs):
        for m, c in g.terms.items():
            grid[r][col[m]] = c
    return rank(QMatrix.from_rows(grid, len(monos))) == len(gs)


def perazzo(g_list, names) -> Poly:
    """Sum x_i g_i over fresh x-variables paired with the given forms."""
    g_list = list(g_list)
    names = tuple(names)
    if not g_list:
        raise ValueError("need at least one summand")
    if len(names) != len(g_list):
        raise ValueError("one x-variable name per summand required")
    u_vars = g_list[0].var_names
    for g in g_list:
        if g.var_names != u_vars:
            raise ValueError("summands must share their u-variables")
    if set(names) & set(u_vars):
        raise ValueError("x-variable names collide with u-variables")
    form = BigradedForm(
        x_vars=names,
        u_vars=u_vars,
        summands=tuple((i, g) for i, g in enumerate(g_list)),
    )
    return form.to_poly()


def perazzo_example(d: int) -> Poly:
    """The standard 5-variable Perazzo form of degree d >= 3.

    Odd d = 2k+1: x u^{2k} + y u^k v^k + z v^{2k}   (f_x f_z = f_y^2);
    even d = 2k:  x u^{2k-1} + y u v^{2k-2} + z u^k v^{k-1}   (f_x f_y = f_z^2).
    Either way exactly one algebraic relation among the partials, and the
    classical Hessian has generic rank 4 on 5 variables.
    """
    if d < 3:
        raise ValueError("degree must be at least 3")
    uv = ("u", "v")
    k = d // 2
    if d % 2:
        gs = [
            Poly.monomial(uv, (2 * k, 0)),
            Poly.monomial(uv, (k, k)),
            Poly.monomial(uv, (0, 2 * k)),
        ]
    else:
        gs = [
            Poly.monomial(uv, (2 * k - 1, 0)),
            Poly.monomial(uv, (1, 2 * k - 2)),
            Poly.monomial(uv, (k, k - 1)),
        ]
    return perazzo(gs, ("x", "y", "z"))


def _rename_disjoint(f2: Poly, taken) -> Poly:
    """Suffix colliding variable names with 2, 3, ... deterministically."""
    taken = set(taken)
    new_names = []
    for name in f2.var_names:
        if name not in taken:
            new_names.append(name)
            taken.add(name)
            continue
        suffix = 2
        while f"{name}{suffix}" in taken:
            suffix += 1
        new_names.append(f"{name}{suffix}")
        taken.add(f"{name}{suffix}")
    return Poly(new_names, f2.terms)


def coproduct(f: Poly, f2: Poly) -> Poly:
    """f + f2 in disjoint variables (second operand renamed as needed)."""
    if f.degree() != f2.degree():
        raise ValueError(
            f"degrees differ: {f.degree()} vs {f2.degree()}"
        )
    f2 = _rename_disjoint(f2, f.var_names)
    names = f.var_names + f2.var_names
    n1, n2 = f.num_vars, f2.num_vars
    terms = {}
    for mono, c in f.terms.items():
        terms[mono + (0,) * n2] = c
    for mono, c in f2.terms.items():
        key = (0,) * n1 + mono
        terms[key] = terms.get(key, 0) + c
    return Poly(names, terms)


def concat(f: BigradedForm, f2: BigradedForm) -> Poly:
    """Glue two Perazzo forms along a shared corner summand.

    Requires f's last x-variable to carry g_n = u_m^{d-1} and f2's first to
    carry g'_1 = (u'_1)^{d-1}; identifying x'_1 = x_n and u'_1 = u_m and
    dropping the doubled corner term yields a Perazzo form again, with
    Hessian rank the sum of the two minus 2.
    """
    e = f.inner_degree
    if f2.inner_degree != e:
        raise ValueError("degrees differ")
    m = len(f.u_vars)
    corner = tuple(e if t == m - 1 else 0 for t in range(m))
    last = _summand(f, len(f.x_vars) - 1)
    if last is None or last.terms != {corner: 1}:
        raise ValueError(
            "first operand must end in x_n * u_m^{d-1} with coefficient 1"
        )
    corner2 = tuple(e if t == 0 else 0 for t in range(len(f2.u_vars)))
    first2 = _summand(f2, 0)
    if first2 is None or first2.terms != {corner2: 1}:
        raise ValueError(
            "second operand must start with x'_1 * (u'_1)^{d-1} with coefficient 1"
        )
    # identifications: x'_1 = x_n, u'_1 = u_m; everything else stays disjoint
    taken = set(f.x_vars) | set(f.u_vars)
    rename = {f2.x_vars[0]: f.x_vars[-1], f2.u_vars[0]: f.u_vars[-1]}
    for name in f2.x_vars[1:] + f2.u_vars[1:]:
        if name in taken:
            suffix = 2
            while f"{name}{suffix}" in taken:
                suffix += 1
            rename[name] = f"{name}{suffix}"
        else:
            rename[name] = name
        taken.add(rename[name])
    x_vars = f.x_vars + tuple(rename[v] for v in f2.x_vars[1:])
    u_vars = f.u_vars + tuple(rename[v] for v in f2.u_vars[1:])
    names = x_vars + u_vars
    pos = {v: i for i, v in enumerate(names)}
    terms = {}
    for form, xs, us in ((f, f.x_vars, f.u_vars),
                         (f2, tuple(rename[v] for v in f2.x_vars),
                          tuple(rename[v] for v in f2.u_vars))):
        for idx, g in form.summands:
            for umono, c in g.terms.items():
                mono = [0] * len(names)
                mono[pos[xs[idx]]] = 1
                for uv, ue in zip(us, umono):
                    mono[pos[uv]] += ue
                key = tuple(mono)
                terms[key] = terms.get(key, 0) + c
    # the shared corner x_n u_m^{d-1} was added twice
    shared = [0] * len(names)
    shared[pos[f.x_vars[-1]]] = 1
    shared[pos[f.u_vars[-1]]] += e
    terms[tuple(shared)] = terms.get(tuple(shared), 0) - 1
    return Poly(names, terms)


def _summand(form: BigradedForm, idx: int):
    for i, g in form.summands:
        if i == idx:
            return g
    return None


def rank_drop_family(d: int, delta: int) -> Poly:
    """Disjoint sum of delta Perazzo examples: corank delta on 5*delta variables."""
    if d < 3:
        raise ValueError("degree must be at least 3")
    if delta < 1:
        raise ValueError("delta must be at least 1")
    out = perazzo_example(d)
    for _ in range(delta - 1):
        out = coproduct(out, perazzo_example(d))
    return out


def as_bigraded(f: Poly) -> BigradedForm:
    """Recover the x/u split of a Perazzo-shaped polynomial.

    Every variable of exponent >= 2 anywhere must be a u-variable; each term
    must then contain exactly one leftover variable, which is its x.  Terms
    whose split stays ambiguous promote their earliest candidate to x and
    the rest to u, deterministically; validation rejects bad splits.
    """
    if f.is_zero() or not f.is_homogeneous() or f.degree() < 2:
        raise ValueError("expected a homogeneous form of degree at least 2")
    monos = [mono for mono, _ in f.sorted_terms()]
    u_set = {i for mono in monos for i, e in enumerate(mono) if e >= 2}
    x_set = set()
    while True:
        changed = True
        while changed:
            changed = False
            for mono in monos:
                support = [i for i, e in enumerate(mono) if e]
                fixed = [i for i in support if i in x_set]
                free = [i for i in support if i not in u_set and i not in x_set]
                if len(fixed) > 1:
                    raise ValueError(
                        "two x-variables share a term; not bigraded (1, d-1)"
                    )
                if fixed and free:
                    u_set.update(free)
                    changed = True
                elif not fixed and len(free) == 1:
                    x_set.add(free[0])
                    changed = True
        pending = None
        for mono in monos:
            support = [i for i, e in enumerate(mono) if e]
            if not any(i in x_set for i in support):
                free = [i for i in support if i not in u_set]
                if len(free) > 1:
                    pending = free[0]
                    break
        if pending is None:
            break
        x_set.add(pending)
    x_idx = sorted(x_set)
    u_idx = sorted(u_set)
    x_vars = tuple(f.var_names[i] for i in x_idx)
    u_vars = tuple(f.var_names[i] for i in u_idx)
    col = {i: t for t, i in enumerate(u_idx)}
    summands = {}
    for mono, c in f.terms.items():
        xs = [i for i in x_idx if mono[i]]
        if len(xs) != 1 or mono[xs[0]] != 1:
            raise ValueError("every term needs exactly one x-variable, degree 1")
        umono = [0] * len(u_idx)
        for i, e in enumerate(mono):
            if e and i != xs[0]:
                if i not in col:
                    raise ValueError("inconsistent split; not bigraded (1, d-1)")
                umono[col[i]] = e
        key = x_idx.index(xs[0])
        g = summands.setdefault(key, {})
        g[tuple(umono)] = c
    return BigradedForm(
        x_vars=x_vars,
        u_vars=u_vars,
        summands=tuple(
            (idx, Poly(u_vars, g)) for idx, g in sorted(summands.items())
        ),
    )
