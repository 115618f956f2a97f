"""Permutation groups, group input specifications, and abstract isomorphism testing."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import product
from pathlib import Path
from typing import Sequence

from .perm import (
    CLOSURE_CAP,
    Permutation,
    PermutationError,
    closure,
    identity,
    parse_permutations,
)

#: Largest group order accepted by :func:`groups_isomorphic`.
ISOMORPHISM_CAP = 64

NAMED_FAMILIES = ("trivial", "cyclic", "dihedral", "symmetric", "klein_four")


class GroupSpecError(ValueError):
    pass


class GroupCapExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class PermGroup:
    degree: int
    generators: tuple[Permutation, ...]
    order: int

    def __post_init__(self) -> None:
        if not self.generators:
            object.__setattr__(self, "generators", (identity(self.degree),))
        if any(g.degree != self.degree for g in self.generators):
            raise PermutationError("generator degree does not match group degree")

    @classmethod
    def generated_by(cls, gens: Sequence[Permutation], degree: int | None = None,
                     cap: int = CLOSURE_CAP) -> PermGroup:
        gens = tuple(gens)
        if degree is None:
            if not gens:
                raise PermutationError("degree is required when there are no generators")
            degree = gens[0].degree
        gens = gens or (identity(degree),)
        return cls(degree, gens, len(closure(gens, cap)))

    def elements(self, cap: int = CLOSURE_CAP) -> list[Permutation]:
        return closure(self.generators, cap)


@dataclass(frozen=True)
class GroupSpec:
    """A finite group given by name, by Cayley table, or by permutation generators.

    Build instances through :meth:`named`, :meth:`from_cayley_table` or
    :meth:`from_generators`; each validates its input eagerly.
    """

    kind: str
    family: str | None = None
    parameter: int | None = None
    table: tuple[tuple[int, ...], ...] | None = None
    degree: int | None = None
    generators: tuple[Permutation, ...] = field(default=())

    @classmethod
    def named(cls, family: str, parameter: int | None = None) -> GroupSpec:
        if family not in NAMED_FAMILIES:
            raise GroupSpecError(f"unknown group family {family!r}")
        if family in ("trivial", "klein_four"):
            return cls("named", family=family)
        if parameter is None:
            raise GroupSpecError(f"family {family!r} needs a parameter")
        minimum = {"cyclic": 1, "dihedral": 3, "symmetric": 1}[family]
        if parameter < minimum:
            raise GroupSpecError(f"{family} needs parameter >= {minimum}, got {parameter}")
        return cls("named", family=family, parameter=int(parameter))

    @classmethod
    def from_cayley_table(cls, table: Sequence[Sequence[int]]) -> GroupSpec:
        t = tuple(tuple(int(x) for x in row) for row in table)
        validate_cayley_table(t)
        return cls("cayley_table", table=t)

    @classmethod
    def from_generators(cls, degree: int, generators: Sequence[Permutation]) -> GroupSpec:
        gens = tuple(generators)
        if degree < 1:
            raise GroupSpecError("degree must be positive")
        for g in gens:
            if g.degree != degree:
                raise GroupSpecError(f"generator {g} does not have degree {degree}")
        return cls("perm_generators", degree=degree, generators=gens)

    def __str__(self) -> str:
        if self.kind == "named":
            return self.family if self.parameter is None else f"{self.family}:{self.parameter}"
        if self.kind == "cayley_table":
            return f"cayley_table(order={len(self.table)})"
        return f"perm_generators(degree={self.degree}, count={len(self.generators)})"


def validate_cayley_table(table: Sequence[Sequence[int]]) -> int:
    """Check group axioms exhaustively; return the identity element index."""
    k = len(table)
    if k == 0:
        raise GroupSpecError("Cayley table is empty")
    full = set(range(k))
    for a, row in enumerate(table):
        if len(row) != k:
            raise GroupSpecError(f"row {a} has {len(row)} entries, expected {k}")
        if set(row) != full:
            raise GroupSpecError(f"row {a} is not a permutation of 0..{k - 1}")
    for b in range(k):
        if {table[a][b] for a in range(k)} != full:
            raise GroupSpecError(f"column {b} is not a permutation of 0..{k - 1}")
    ids = [e for e in range(k)
           if all(table[e][x] == x and table[x][e] == x for x in range(k))]
    if not ids:
        raise GroupSpecError("Cayley table has no identity element")
    for a in range(k):
        ta = table[a]
        for b in range(k):
            ab = ta[b]
            tab, tb = table[ab], table[b]
            for c in range(k):
                if tab[c] != ta[tb[c]]:
                    raise GroupSpecError(f"not associative at ({a}, {b}, {c})")
    return ids[0]


def _named_generators(family: str, m: int | None) -> tuple[int, list[Permutation]]:
    if family == "trivial" or (family in ("cyclic", "symmetric") and m == 1):
        return 1, [identity(1)]
    if family == "cyclic":
        return m, [Permutation.from_cycles(m, range(m))]
    if family == "dihedral":
        rotation = Permutation.from_cycles(m, range(m))
        reflection = Permutation(tuple((-v) % m for v in range(m)))
        return m, [rotation, reflection]
    if family == "symmetric":
        if m == 2:
            return 2, [Permutation((1, 0))]
        return m, [Permutation.from_cycles(m, (0, 1)), Permutation.from_cycles(m, range(m))]
    if family == "klein_four":
        return 4, [Permutation((1, 0, 3, 2)), Permutation((2, 3, 0, 1))]
    raise GroupSpecError(f"unknown group family {family!r}")


def group_from_spec(spec: GroupSpec, cap: int = CLOSURE_CAP) -> PermGroup:
    """Faithful permutation representation of ``spec``.

    A Cayley table becomes its left-regular representation, generated by all
    non-identity elements.
    """
    if spec.kind == "named":
        degree, gens = _named_generators(spec.family, spec.parameter)
        return PermGroup.generated_by(gens, degree, cap)
    if spec.kind == "cayley_table":
        table = spec.table
        e = validate_cayley_table(table)
        gens = [Permutation(table[a]) for a in range(len(table)) if a != e]
        return PermGroup.generated_by(gens, len(table), cap)
    if spec.kind == "perm_generators":
        return PermGroup.generated_by(spec.generators, spec.degree, cap)
    raise GroupSpecError(f"unknown group spec kind {spec.kind!r}")


def element_order_profile(elements: Sequence[Permutation]) -> Counter:
    return Counter(p.order() for p in elements)


def _reduced_generators(elements: list[Permutation]) -> list[Permutation]:
    """Greedy small generating set, drawn in element order."""
    gens: list[Permutation] = []
    span = {elements[0].images}
    for x in elements:
        if x.images not in span:
            gens.append(x)
            span = {p.images for p in closure(gens)}
            if len(span) == len(elements):
                break
    return gens


def _extends_to_isomorphism(a_elems, a_gens, images, b_size) -> bool:
    """Try the map defined by ``gen_i -> images[i]`` via f(x*s) = f(x)*f(s)."""
    ident = a_elems[0].images
    f = {ident: tuple(range(len(images[0])))}
    frontier = [ident]
    gen_pairs = [(s.images, t.images) for s, t in zip(a_gens, images)]
    while frontier:
        nxt = []
        for x in frontier:
            fx = f[x]
            for s, t in gen_pairs:
                y = tuple(x[i] for i in s)
                fy = tuple(fx[i] for i in t)
                seen = f.get(y)
                if seen is None:
                    f[y] = fy
                    nxt.append(y)
                elif seen != fy:
                    return False
        frontier = nxt
    return len(f) == len(a_elems) and len(set(f.values())) == b_size


def groups_isomorphic(a: PermGroup, b: PermGroup, cap: int = ISOMORPHISM_CAP) -> bool:
    """Exhaustive abstract isomorphism test for small groups.

    Candidate images of a small generating set of ``a`` are drawn from the
    elements of ``b`` with matching element orders; each assignment is
    extended multiplicatively and accepted only if it is well defined and
    bijective.
    """
    if a.order > cap or b.order > cap:
        raise GroupCapExceeded(f"group orders {a.order}, {b.order} exceed the cap of {cap}")
    if a.order != b.order:
        return False
    a_elems, b_elems = a.elements(), b.elements()
    if element_order_profile(a_elems) != element_order_profile(b_elems):
        return False
    if a.order == 1:
        return True
    gens = _reduced_generators(a_elems)
    by_order: dict[int, list[Permutation]] = {}
    for y in b_elems:
        by_order.setdefault(y.order(), []).append(y)
    candidates = [by_order.get(s.order(), []) for s in gens]
    for images in product(*candidates):
        if _extends_to_isomorphism(a_elems, gens, images, b.order):
            return True
    return False


def parse_cayley_table(text: str) -> list[list[int]]:
    """Read ``k`` on the first line followed by ``k`` rows of ``k`` indices."""
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise GroupSpecError("empty Cayley table file")
    try:
        k = int(lines[0])
        rows = [[int(tok) for tok in ln.split()] for ln in lines[1:]]
    except ValueError:
        raise GroupSpecError("Cayley table entries must be integers") from None
    if len(rows) != k:
        raise GroupSpecError(f"expected {k} table rows, got {len(rows)}")
    return rows


def parse_group_spec(text: str) -> GroupSpec:
    """Parse the command-line group syntax.

    Accepted forms: ``trivial``, ``cyclic:n``, ``dihedral:n``, ``symmetric:n``,
    ``klein4``, ``cayley:<path>``, ``perms:<path>``.
    """
    name, _, arg = text.strip().partition(":")
    if name == "trivial" and not arg:
        return GroupSpec.named("trivial")
    if name in ("klein4", "klein_four") and not arg:
        return GroupSpec.named("klein_four")
    if name in ("cyclic", "dihedral", "symmetric"):
        try:
            return GroupSpec.named(name, int(arg))
        except ValueError:
            raise GroupSpecError(f"{name} needs an integer parameter, got {arg!r}") from None
    if name == "cayley" and arg:
        return GroupSpec.from_cayley_table(parse_cayley_table(Path(arg).read_text()))
    if name == "perms" and arg:
        gens = parse_permutations(Path(arg).read_text())
        if not gens:
            raise GroupSpecError(f"no permutations found in {arg}")
        return GroupSpec.from_generators(gens[0].degree, gens)
    raise GroupSpecError(f"unrecognised group spec {text!r}")
