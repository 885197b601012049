import itertools

import numpy as np
import pytest

from zsocle.groups import Group, close_generators


def relabel(g: Group, seed: int) -> Group:
    """The same group with its non-identity elements shuffled."""
    rng = np.random.default_rng(seed)
    sigma = np.concatenate([[0], 1 + rng.permutation(g.order - 1)])
    mul = np.empty_like(g.mul)
    mul[np.ix_(sigma, sigma)] = sigma[g.mul]
    labels = [""] * g.order
    for old, new in enumerate(sigma):
        labels[new] = g.labels[old]
    gens = tuple(int(sigma[x]) for x in g.generators)
    return Group(mul, tuple(labels), gens, g.p_hint, g.name + "'")


def matrix_group(mats, q):
    """Closure of 2x2 matrices over F_q acting on the nonzero row vectors."""
    points = [v for v in itertools.product(range(q), repeat=2) if any(v)]
    index = {v: i for i, v in enumerate(points)}
    vecs = np.array(points)
    perms = []
    for m in mats:
        img = (vecs @ np.array(m)) % q
        perms.append([index[tuple(int(x) for x in row)] for row in img])
    return close_generators(len(points), perms)


def polygon_dihedral(m):
    """Rotation and reflection of an m-gon as permutations."""
    rot = [(i + 1) % m for i in range(m)]
    ref = [(-i) % m for i in range(m)]
    return close_generators(m, [rot, ref])


@pytest.fixture(scope="session")
def small_p_groups():
    from zsocle.catalog import builtin_groups

    return [(spec, g) for spec, g in builtin_groups() if g.order <= 64]


# acceptance criterion -> (passed, title, detail), filled in by test_acceptance.py
ACCEPTANCE: dict[int, tuple[bool, str, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, title, detail = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n:>2}: {'PASS' if ok else 'FAIL'}  {title} ({detail})")
