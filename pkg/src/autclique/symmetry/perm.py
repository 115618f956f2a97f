"""Permutations of ``0..n-1`` in one-line (image list) form."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

#: Default limit on the number of elements a closure may enumerate.
CLOSURE_CAP = 10**6


class PermutationError(ValueError):
    pass


class ClosureCapExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class Permutation:
    """Bijection on ``range(len(images))``; ``images[v]`` is the image of ``v``."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        imgs = tuple(int(x) for x in self.images)
        if sorted(imgs) != list(range(len(imgs))):
            raise PermutationError(f"not a bijection on 0..{len(imgs) - 1}: {list(imgs)}")
        object.__setattr__(self, "images", imgs)

    @classmethod
    def from_cycles(cls, n: int, *cycles: Sequence[int]) -> Permutation:
        images = list(range(n))
        for cyc in cycles:
            for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
                images[a] = b
        return cls(tuple(images))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, v: int) -> int:
        return self.images[v]

    def __len__(self) -> int:
        return len(self.images)

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def is_identity(self) -> bool:
        return all(i == v for i, v in enumerate(self.images))

    def order(self) -> int:
        from math import lcm

        seen = [False] * self.degree
        result = 1
        for start in range(self.degree):
            if seen[start]:
                continue
            length, v = 0, start
            while not seen[v]:
                seen[v] = True
                v = self.images[v]
                length += 1
            result = lcm(result, length)
        return result

    def cycles(self) -> list[tuple[int, ...]]:
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start]:
                continue
            cyc, v = [], start
            while not seen[v]:
                seen[v] = True
                cyc.append(v)
                v = self.images[v]
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def __str__(self) -> str:
        return format_permutation(self)


def identity(n: int) -> Permutation:
    return Permutation(tuple(range(n)))


def compose(p: Permutation, q: Permutation) -> Permutation:
    """``p`` after ``q``: ``result[v] = p[q[v]]``."""
    if p.degree != q.degree:
        raise PermutationError(f"degree mismatch: {p.degree} vs {q.degree}")
    pi = p.images
    return Permutation(tuple(pi[x] for x in q.images))


def inverse(p: Permutation) -> Permutation:
    inv = [0] * p.degree
    for v, img in enumerate(p.images):
        inv[img] = v
    return Permutation(tuple(inv))


def closure(gens: Iterable[Permutation], cap: int = CLOSURE_CAP) -> list[Permutation]:
    """All elements of the group generated by ``gens``, identity first, in BFS order."""
    gens = list(gens)
    if not gens:
        raise PermutationError("closure needs at least one generator")
    n = gens[0].degree
    if any(g.degree != n for g in gens):
        raise PermutationError("generators have different degrees")
    gen_images = [g.images for g in gens]
    start = tuple(range(n))
    seen = {start}
    order = [start]
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for s in gen_images:
            # right multiplication x*s: apply s first
            y = tuple(x[i] for i in s)
            if y not in seen:
                seen.add(y)
                if len(seen) > cap:
                    raise ClosureCapExceeded(f"group has more than {cap} elements")
                order.append(y)
                queue.append(y)
    return [Permutation(x) for x in order]


def closure_order(gens: Iterable[Permutation], cap: int = CLOSURE_CAP) -> int:
    return len(closure(gens, cap))


def format_permutation(p: Permutation) -> str:
    return "p: " + " ".join(map(str, p.images))


def parse_permutation(line: str) -> Permutation:
    text = line.strip()
    if text.startswith("p:"):
        text = text[2:]
    try:
        images = tuple(int(tok) for tok in text.split())
    except ValueError:
        raise PermutationError(f"bad permutation line {line!r}") from None
    return Permutation(images)


def parse_permutations(text: str) -> list[Permutation]:
    perms = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            perms.append(parse_permutation(line))
    return perms
