"""Finite groups as full multiplication tables.

A :class:`Group` stores every element by index (identity at 0) together
with its ``order x order`` multiplication table.  Families used in the
modular representation theory of p-groups (cyclic, elementary abelian,
extraspecial, maximal class 2-groups) are built from normal forms;
arbitrary small groups come from permutation generators or raw tables.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Iterable, Sequence

import numpy as np
from sympy import factorint, isprime

__all__ = [
    "DEFAULT_ORDER_CAP",
    "Group",
    "GroupError",
    "OrderCapExceeded",
    "SubgroupSet",
    "close_generators",
    "commutator_subgroup",
    "conjugacy_classes",
    "cyclic",
    "dihedral",
    "direct_product",
    "elementary_abelian",
    "extraspecial_minus",
    "extraspecial_plus",
    "generator_map_isomorphism",
    "is_p_group",
    "load_table",
    "make_family",
    "minimal_generators_mod",
    "perm_from_cycles",
    "power_subgroup",
    "quaternion",
    "semidihedral",
    "subgroup_generated",
    "subgroup_product",
]

DEFAULT_ORDER_CAP = 4096
_EXHAUSTIVE_ASSOC_LIMIT = 256


class GroupError(ValueError):
    pass


class OrderCapExceeded(GroupError):
    pass


def _prime_power(n: int) -> int | None:
    f = factorint(n)
    return next(iter(f)) if len(f) == 1 else None


@dataclass(frozen=True, eq=False)
class Group:
    """A finite group given by its multiplication table.

    ``mul[g, h]`` is the index of ``g*h``; index 0 is the identity.
    ``labels`` are display words and carry no meaning.
    """

    mul: np.ndarray
    labels: tuple[str, ...]
    generators: tuple[int, ...]
    p_hint: int | None = None
    name: str = ""
    inv: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        mul = np.ascontiguousarray(self.mul, dtype=np.intp)
        mul.setflags(write=False)
        object.__setattr__(self, "mul", mul)
        n = mul.shape[0]
        if mul.shape != (n, n):
            raise GroupError("multiplication table must be square")
        if len(self.labels) != n:
            raise GroupError("need one label per element")
        rows, cols = np.nonzero(mul == 0)
        inv = np.full(n, -1, dtype=np.intp)
        inv[rows] = cols
        if (inv < 0).any():
            raise GroupError("some element has no inverse")
        inv.setflags(write=False)
        object.__setattr__(self, "inv", inv)

    def __repr__(self) -> str:
        return f"Group({self.name or '?'}, order={self.order})"

    @property
    def order(self) -> int:
        return self.mul.shape[0]

    @property
    def identity(self) -> int:
        return 0

    def power(self, g, e: int):
        """``g**e`` for an index or an array of indices (``e >= 0``)."""
        g = np.asarray(g, dtype=np.intp)
        result = np.zeros_like(g)
        base = g
        while e:
            if e & 1:
                result = self.mul[result, base]
            base = self.mul[base, base]
            e >>= 1
        return result if result.ndim else int(result)

    def element_order(self, g: int) -> int:
        k, x = 1, g
        while x != 0:
            x = self.mul[x, g]
            k += 1
        return k

    def exponent(self) -> int:
        from math import lcm

        out = 1
        for g in range(self.order):
            out = lcm(out, self.element_order(g))
        return out

    def conjugate(self, x, g):
        """``g^-1 x g``."""
        return self.mul[self.inv[g], self.mul[x, g]]

    def is_abelian(self) -> bool:
        return np.array_equal(self.mul, self.mul.T)

    def check_axioms(self, samples: int = 20000, seed: int = 0) -> None:
        """Raise :class:`GroupError` unless the table is a group law.

        Associativity is checked on all triples up to order 256 and on a
        random sample above that.
        """
        n, mul = self.order, self.mul
        if (mul < 0).any() or (mul >= n).any():
            raise GroupError("table entries out of range")
        ar = np.arange(n)
        if not (np.array_equal(mul[0], ar) and np.array_equal(mul[:, 0], ar)):
            raise GroupError("index 0 is not a two-sided identity")
        if not np.array_equal(mul[ar, self.inv], np.zeros(n, dtype=np.intp)):
            raise GroupError("inverse table inconsistent")
        if n <= _EXHAUSTIVE_ASSOC_LIMIT:
            for a in range(n):
                if not np.array_equal(mul[mul[a]][:, ar], mul[a][mul]):
                    raise GroupError(f"associativity fails with first factor {a}")
        else:
            rng = np.random.default_rng(seed)
            a, b, c = rng.integers(0, n, size=(3, samples))
            if not np.array_equal(mul[mul[a, b], c], mul[a, mul[b, c]]):
                raise GroupError("associativity fails on a sampled triple")

    def subgroup(self, members: Iterable[int]) -> "SubgroupSet":
        return SubgroupSet(self, members)

    def whole(self) -> "SubgroupSet":
        return SubgroupSet(self, range(self.order))

    def trivial(self) -> "SubgroupSet":
        return SubgroupSet(self, [0])

    def index_of(self, label: str) -> int:
        return self.labels.index(label)


@dataclass(frozen=True, eq=False)
class SubgroupSet:
    """A subgroup of ``group`` as a sorted array of element indices."""

    group: Group
    members: np.ndarray

    def __post_init__(self):
        m = self.members
        m = np.unique(np.asarray(m if isinstance(m, np.ndarray) else list(m), dtype=np.intp))
        m.setflags(write=False)
        object.__setattr__(self, "members", m)

    def __repr__(self) -> str:
        return f"SubgroupSet(order={self.order} in {self.group!r})"

    @property
    def order(self) -> int:
        return self.members.size

    def __len__(self) -> int:
        return self.order

    def __contains__(self, g) -> bool:
        i = np.searchsorted(self.members, g)
        return bool(i < self.members.size and self.members[i] == g)

    def contains_all(self, gs) -> bool:
        gs = np.asarray(gs, dtype=np.intp).ravel()
        i = np.searchsorted(self.members, gs)
        i = np.minimum(i, self.members.size - 1)
        return bool(np.all(self.members[i] == gs))

    def __eq__(self, other) -> bool:
        if not isinstance(other, SubgroupSet):
            return NotImplemented
        return self.group is other.group and np.array_equal(self.members, other.members)

    def __hash__(self) -> int:
        return hash((id(self.group), self.members.tobytes()))

    def __le__(self, other: "SubgroupSet") -> bool:
        return other.contains_all(self.members)

    def __ge__(self, other: "SubgroupSet") -> bool:
        return other <= self

    def is_closed(self) -> bool:
        m, g = self.members, self.group
        return (
            0 in self
            and self.contains_all(g.mul[np.ix_(m, m)])
            and self.contains_all(g.inv[m])
        )

    def is_normal(self) -> bool:
        g = self.group
        gens = np.asarray(g.generators or [0], dtype=np.intp)
        conj = g.mul[g.inv[gens][:, None], g.mul[self.members][:, gens].T]
        return self.contains_all(conj)

    def labels(self) -> list[str]:
        return [self.group.labels[i] for i in self.members]


# ---------------------------------------------------------------------------
# subgroup operations


def subgroup_generated(g: Group, seed: Iterable[int]) -> SubgroupSet:
    seed = np.unique(np.asarray(list(seed), dtype=np.intp))
    seed = seed[seed != 0]
    members = np.array([0], dtype=np.intp)
    if seed.size == 0:
        return SubgroupSet(g, members)
    frontier = members
    seen = np.zeros(g.order, dtype=bool)
    seen[0] = True
    while frontier.size:
        new = np.unique(g.mul[np.ix_(frontier, seed)])
        new = new[~seen[new]]
        seen[new] = True
        frontier = new
    return SubgroupSet(g, np.flatnonzero(seen))


def subgroup_product(*subgroups: SubgroupSet) -> SubgroupSet:
    """The subgroup generated by the union of the given subgroups."""
    g = subgroups[0].group
    return subgroup_generated(g, np.concatenate([s.members for s in subgroups]))


def commutator_subgroup(h: SubgroupSet, g: Group | None = None) -> SubgroupSet:
    """``[H, G]``, generated by ``h^-1 x^-1 h x``; ``H`` must be normal."""
    g = h.group if g is None else g
    if h.group is not g:
        raise GroupError("subgroup belongs to a different group")
    if not h.is_normal():
        raise GroupError("[H, G] requested for a non-normal H")
    hm = h.members
    xs = np.arange(g.order)
    comms = []
    for chunk in np.array_split(hm, max(1, hm.size * g.order // 2**20)):
        left = g.mul[g.inv[chunk][:, None], g.inv[xs][None, :]]
        right = g.mul[chunk][:, xs]
        comms.append(np.unique(g.mul[left, right]))
    return subgroup_generated(g, np.concatenate(comms))


def power_subgroup(h: SubgroupSet, e: int) -> SubgroupSet:
    """Subgroup generated by ``{x**e : x in H}``."""
    if e < 1:
        raise ValueError("exponent must be positive")
    return subgroup_generated(h.group, h.group.power(h.members, e))


def conjugacy_classes(g: Group) -> list[list[int]]:
    """Conjugacy classes, each sorted, ordered by smallest member."""
    seen = np.zeros(g.order, dtype=bool)
    xs = np.arange(g.order)
    classes = []
    for x in range(g.order):
        if seen[x]:
            continue
        orbit = np.unique(g.mul[g.inv[xs], g.mul[x, xs]])
        seen[orbit] = True
        classes.append([int(v) for v in orbit])
    return classes


def minimal_generators_mod(g: Group, h: SubgroupSet, k: SubgroupSet, p: int) -> list[int]:
    """Elements of ``h`` whose images form an F_p-basis of ``h/k``.

    Greedy over ascending element index, so the choice is reproducible.
    """
    if not k <= h:
        raise GroupError("k is not contained in h")
    if not (h.is_normal() and k.is_normal()):
        raise GroupError("h and k must be normal")
    hm = h.members
    if not k.contains_all(g.power(hm, p)):
        raise GroupError("h/k has exponent larger than p")
    if not k.contains_all(g.mul[g.mul[g.inv[hm][:, None], g.inv[hm][None, :]], g.mul[np.ix_(hm, hm)]]):
        raise GroupError("h/k is not abelian")
    ratio = h.order // k.order
    r = 0
    while p**r < ratio:
        r += 1
    if p**r != ratio:
        raise GroupError("|h/k| is not a power of p")
    picks: list[int] = []
    current = k
    for x in hm:
        if len(picks) == r:
            break
        if x in current:
            continue
        picks.append(int(x))
        current = subgroup_generated(g, np.append(current.members, x))
    return picks


def is_p_group(g: Group) -> int | None:
    """The prime ``p`` with ``|G| = p^k``; ``1`` flags the trivial group."""
    if g.order == 1:
        return 1
    return _prime_power(g.order)


def generator_map_isomorphism(g: Group, h: Group, images: Sequence[int]) -> np.ndarray | None:
    """Extend ``g.generators[i] -> images[i]`` to an isomorphism if possible.

    Returns the element map as an array, or ``None`` when the assignment
    does not extend to a bijective homomorphism.
    """
    if g.order != h.order or len(images) != len(g.generators):
        return None
    phi = np.full(g.order, -1, dtype=np.intp)
    phi[0] = 0
    queue = deque([0])
    pairs = list(zip(g.generators, images))
    while queue:
        x = queue.popleft()
        for s, t in pairs:
            y, img = g.mul[x, s], h.mul[phi[x], t]
            if phi[y] < 0:
                phi[y] = img
                queue.append(y)
            elif phi[y] != img:
                return None
    if (phi < 0).any() or np.unique(phi).size != g.order:
        return None
    if not np.array_equal(phi[g.mul], h.mul[np.ix_(phi, phi)]):
        return None
    return phi


# ---------------------------------------------------------------------------
# constructors


def _word(names: Sequence[str], exps: Sequence[int]) -> str:
    parts = [n if e == 1 else f"{n}^{e}" for n, e in zip(names, exps) if e]
    return "*".join(parts) or "1"


def _check_cap(n: int, cap: int = DEFAULT_ORDER_CAP) -> None:
    if n > cap:
        raise OrderCapExceeded(f"group order {n} exceeds cap {cap}")


def _from_normal_forms(
    radices: Sequence[int],
    names: Sequence[str],
    product: Callable[[list[np.ndarray], list[np.ndarray]], list[np.ndarray]],
    generators: Sequence[int],
    p_hint: int | None,
    name: str,
) -> Group:
    """Build a group on tuples ``(e_0, e_1, ...)`` with ``e_k < radices[k]``.

    Index = mixed radix with the first coordinate fastest; ``product``
    maps broadcast coordinate arrays of two factors to product coordinates.
    """
    n = int(np.prod(radices))
    _check_cap(n)
    strides = np.cumprod([1, *radices[:-1]])
    idx = np.arange(n)
    coords = [(idx // s) % r for s, r in zip(strides, radices)]
    left = [c[:, None] for c in coords]
    right = [c[None, :] for c in coords]
    res = product(left, right)
    mul = sum((np.mod(c, r) * s for c, r, s in zip(res, radices, strides)), np.zeros((n, n), dtype=np.intp))
    labels = tuple(_word(names, [int(c[i]) for c in coords]) for i in range(n))
    return Group(mul, labels, tuple(int(x) for x in generators), p_hint, name)


def cyclic(n: int) -> Group:
    if n < 1:
        raise GroupError("cyclic group order must be positive")
    return _from_normal_forms(
        [n], ["a"], lambda L, R: [L[0] + R[0]], [1] if n > 1 else [], _prime_power(n) if n > 1 else None, f"C{n}"
    )


def elementary_abelian(p: int, k: int) -> Group:
    if not isprime(p) or k < 0:
        raise GroupError("elementary_abelian needs a prime p and k >= 0")
    names = [f"a{i + 1}" for i in range(k)] if k > 1 else ["a"]
    if k == 0:
        return cyclic(1)
    gens = [p**i for i in range(k)]
    return _from_normal_forms([p] * k, names, lambda L, R: [x + y for x, y in zip(L, R)], gens, p, f"{p}^{k}")


def extraspecial_plus(p: int) -> Group:
    """``p_+^{1+2}``: exponent p, ``[b, a] = c`` central; normal form a^i b^j c^k."""
    if not isprime(p) or p == 2:
        raise GroupError("extraspecial_plus needs an odd prime")
    # b^j a^i = a^i b^j c^(ij)
    return _from_normal_forms(
        [p, p, p],
        ["a", "b", "c"],
        lambda L, R: [L[0] + R[0], L[1] + R[1], L[2] + R[2] + L[1] * R[0]],
        [1, p],
        p,
        f"{p}+^(1+2)",
    )


def extraspecial_minus(p: int) -> Group:
    """``p_-^{1+2}``: ``a^p = b^(p^2) = 1``, ``b^a = b^(1+p)``; normal form a^i b^j."""
    if not isprime(p) or p == 2:
        raise GroupError("extraspecial_minus needs an odd prime")
    twist = np.array([pow(1 + p, i, p * p) for i in range(p)], dtype=np.intp)

    # b^j a^i = a^i b^(j (1+p)^i)
    def product(L, R):
        return [L[0] + R[0], L[1] * twist[R[0]] + R[1]]

    return _from_normal_forms([p, p * p], ["a", "b"], product, [1, p], p, f"{p}-^(1+2)")


def _two_power_half(n: int, least: int, what: str) -> int:
    if n < least or n & (n - 1):
        raise GroupError(f"{what} order must be a power of 2, at least {least}")
    return n // 2


def dihedral(n: int) -> Group:
    """Dihedral group of order ``n``: ``r^(n/2) = s^2 = 1``, ``s r s = r^-1``."""
    if n < 4 or n % 2:
        raise GroupError("dihedral order must be even and at least 4")
    m = n // 2

    def product(L, R):
        return [L[0] + (1 - 2 * L[1]) * R[0], L[1] + R[1]]

    return _from_normal_forms([m, 2], ["r", "s"], product, [1, m], _prime_power(n), f"D{n}")


def quaternion(n: int) -> Group:
    """Generalized quaternion group: ``x^(n/2) = 1``, ``y^2 = x^(n/4)``, ``y^-1 x y = x^-1``."""
    m = _two_power_half(n, 8, "quaternion")

    def product(L, R):
        return [L[0] + (1 - 2 * L[1]) * R[0] + (L[1] & R[1]) * (m // 2), L[1] + R[1]]

    return _from_normal_forms([m, 2], ["x", "y"], product, [1, m], 2, f"Q{n}")


def semidihedral(n: int) -> Group:
    """Semidihedral group: ``x^(n/2) = y^2 = 1``, ``y x y = x^(n/4 - 1)``."""
    m = _two_power_half(n, 16, "semidihedral")

    def product(L, R):
        return [L[0] + np.where(L[1] == 1, m // 2 - 1, 1) * R[0], L[1] + R[1]]

    return _from_normal_forms([m, 2], ["x", "y"], product, [1, m], 2, f"SD{n}")


def direct_product(a: Group, b: Group) -> Group:
    na, nb = a.order, b.order
    _check_cap(na * nb)
    ia, ib = np.divmod(np.arange(na * nb), na)[::-1]
    mul = a.mul[ia[:, None], ia[None, :]] + na * b.mul[ib[:, None], ib[None, :]]
    labels = tuple(
        "1" if la == lb == "1" else f"{la}|{lb}" for la, lb in ((a.labels[x], b.labels[y]) for x, y in zip(ia, ib))
    )
    gens = tuple(a.generators) + tuple(na * y for y in b.generators)
    p = a.p_hint if a.p_hint == b.p_hint else None
    if a.order == 1:
        p = b.p_hint
    elif b.order == 1:
        p = a.p_hint
    return Group(mul, labels, gens, p, f"{a.name}x{b.name}")


def make_family(kind: str, *args) -> Group:
    builders = {
        "cyclic": cyclic,
        "elementary_abelian": elementary_abelian,
        "extraspecial_plus": extraspecial_plus,
        "extraspecial_minus": extraspecial_minus,
        "dihedral": dihedral,
        "quaternion": quaternion,
        "semidihedral": semidihedral,
        "direct_product": direct_product,
    }
    try:
        build = builders[kind]
    except KeyError:
        raise GroupError(f"unknown family {kind!r}") from None
    return build(*args)


# ---------------------------------------------------------------------------
# permutation closure and raw tables


def perm_from_cycles(n: int, cycles: str) -> tuple[int, ...]:
    """Parse 1-based cycle notation such as ``"(1 2 3)(4 5)"`` into 0-based images."""
    img = list(range(n))
    text = cycles.strip()
    if text in ("", "()"):
        return tuple(img)
    for part in text.replace(")", ")\n").split("\n"):
        part = part.strip()
        if not part:
            continue
        if not (part.startswith("(") and part.endswith(")")):
            raise GroupError(f"bad cycle {part!r}")
        pts = [int(x) - 1 for x in part[1:-1].replace(",", " ").split()]
        if any(not 0 <= x < n for x in pts) or len(set(pts)) != len(pts):
            raise GroupError(f"bad cycle {part!r} on {n} points")
        for x, y in zip(pts, pts[1:] + pts[:1]):
            img[x] = y
    return tuple(img)


def _compress_word(word: list[int], names: Sequence[str]) -> str:
    if not word:
        return "1"
    out, k = [], 0
    while k < len(word):
        j = k
        while j < len(word) and word[j] == word[k]:
            j += 1
        out.append(names[word[k]] if j - k == 1 else f"{names[word[k]]}^{j - k}")
        k = j
    return "*".join(out)


def close_generators(
    n: int, gens: Sequence[Sequence[int]], cap: int = DEFAULT_ORDER_CAP, names: Sequence[str] | None = None
) -> Group:
    """Breadth-first closure of permutations given as 0-based image lists.

    Products compose left to right: ``(g*h)(i) = h(g(i))``.  Labels are
    shortest words in the generators.
    """
    perms = [tuple(int(x) for x in gg) for gg in gens]
    for q in perms:
        if len(q) != n or sorted(q) != list(range(n)):
            raise GroupError(f"not a permutation of {n} points: {q}")
    names = list(names or [f"g{i + 1}" for i in range(len(perms))])
    ident = tuple(range(n))
    elements = [ident]
    words: list[list[int]] = [[]]
    index = {ident: 0}
    queue = deque([0])
    gen_index = []
    while queue:
        x = queue.popleft()
        px = elements[x]
        for k, q in enumerate(perms):
            y = tuple(q[i] for i in px)
            if y not in index:
                if len(elements) >= cap:
                    raise OrderCapExceeded(f"closure exceeds order cap {cap}")
                index[y] = len(elements)
                elements.append(y)
                words.append(words[x] + [k])
                queue.append(index[y])
    for q in perms:
        g = index[q]
        if g and g not in gen_index:
            gen_index.append(g)
    P = np.array(elements, dtype=np.int64)
    N = len(elements)
    rng = np.random.default_rng(12345)
    while True:
        w = rng.integers(1, 2**62, size=n, dtype=np.int64) | 1
        keys = P @ w  # wraps mod 2^64; only needs to be injective on the element set
        if np.unique(keys).size == N:
            break
    order = np.argsort(keys)
    sorted_keys = keys[order]
    mul = np.empty((N, N), dtype=np.intp)
    for g in range(N):
        comp = P[:, P[g]]  # row h: (g*h)(i) = h(g(i))
        mul[g] = order[np.searchsorted(sorted_keys, comp @ w)]
    labels = tuple(_compress_word(wd, names) for wd in words)
    return Group(mul, labels, tuple(gen_index), _prime_power(N) if N > 1 else None, f"perm{n}")


def _greedy_generators(mul: np.ndarray) -> tuple[int, ...]:
    g = Group(mul, tuple(str(i) for i in range(mul.shape[0])), ())
    picks: list[int] = []
    current = g.trivial()
    for x in range(g.order):
        if x not in current:
            picks.append(x)
            current = subgroup_generated(g, list(current.members) + [x])
    return tuple(picks)


def group_from_table(mul, labels: Sequence[str] | None = None, name: str = "table") -> Group:
    mul = np.asarray(mul, dtype=np.intp)
    if mul.ndim != 2 or mul.shape[0] != mul.shape[1] or mul.shape[0] == 0:
        raise GroupError("multiplication table must be a non-empty square array")
    n = mul.shape[0]
    if n > DEFAULT_ORDER_CAP:
        raise OrderCapExceeded(f"table order {n} exceeds cap {DEFAULT_ORDER_CAP}")
    if (mul < 0).any() or (mul >= n).any():
        raise GroupError("table entries out of range")
    labels = tuple(labels) if labels is not None else tuple("1" if i == 0 else f"e{i}" for i in range(n))
    g = Group(mul, labels, _greedy_generators(mul), _prime_power(n) if n > 1 else None, name)
    g.check_axioms()
    return g


def load_table(path: str | Path) -> Group:
    """Read ``{"order": n, "mul": [[...]], "labels": [...]}`` and validate it."""
    data = json.loads(Path(path).read_text())
    try:
        order, mul = int(data["order"]), data["mul"]
    except (KeyError, TypeError, ValueError) as exc:
        raise GroupError(f"malformed table file: {exc}") from None
    mul = np.asarray(mul)
    if mul.shape != (order, order):
        raise GroupError(f"table shape {mul.shape} does not match order {order}")
    return group_from_table(mul, data.get("labels"), name=Path(path).stem)
