"""Named p-groups used by the test and acceptance suites."""

from __future__ import annotations

from .groupspec import parse_group_spec

# every built-in family instance with |G| <= 128 (p=2), 243 (p=3), 125 (p=5)
BUILTIN_SPECS: dict[int, list[str]] = {
    2: [
        *(f"cyclic:{2**k}" for k in range(1, 8)),
        *(f"elab:2^{k}" for k in range(1, 8)),
        *(f"dihedral:{2**k}" for k in range(2, 8)),
        *(f"quaternion:{2**k}" for k in range(3, 8)),
        *(f"semidihedral:{2**k}" for k in range(4, 8)),
        "prod:cyclic:2*cyclic:4",
        "prod:cyclic:4*cyclic:4",
        "prod:cyclic:2*dihedral:8",
        "prod:cyclic:2*quaternion:8",
        "prod:dihedral:8*dihedral:8",
    ],
    3: [
        *(f"cyclic:{3**k}" for k in range(1, 6)),
        *(f"elab:3^{k}" for k in range(1, 6)),
        "xs+:3",
        "xs-:3",
        "prod:cyclic:3*cyclic:9",
        "prod:cyclic:3*xs+:3",
        "prod:cyclic:3*xs-:3",
        "prod:cyclic:9*xs+:3",
        "prod:cyclic:9*cyclic:27",
    ],
    5: [
        *(f"cyclic:{5**k}" for k in range(1, 4)),
        *(f"elab:5^{k}" for k in range(1, 4)),
        "xs+:5",
        "xs-:5",
        "prod:cyclic:5*cyclic:25",
    ],
}


def builtin_groups(p: int | None = None):
    """Yield ``(spec, group)`` pairs, optionally for one prime."""
    for q, specs in BUILTIN_SPECS.items():
        if p is None or p == q:
            for spec in specs:
                yield spec, parse_group_spec(spec)
