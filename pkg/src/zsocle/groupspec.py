"""Textual group specifications.

Grammar::

    cyclic:<n>  elab:<p>^<k>  xs+:<p>  xs-:<p>
    dihedral:<n>  quaternion:<n>  semidihedral:<n>
    prod:<spec>*<spec>[*<spec>...]
    perm:n=<n>;gens=<cycles>;<cycles>...
    table:@<path>
"""

from __future__ import annotations

import hashlib
import re
from pathlib import Path

from . import groups
from .groups import Group, GroupError

__all__ = ["SpecError", "parse_group_spec", "spec_fingerprint"]


class SpecError(GroupError):
    """The text does not parse to a group constructor call."""


def _int(text: str, what: str) -> int:
    if not re.fullmatch(r"\d+", text.strip()):
        raise SpecError(f"expected an integer for {what}, got {text!r}")
    return int(text)


def parse_group_spec(text: str) -> Group:
    text = text.strip()
    kind, sep, rest = text.partition(":")
    if not sep:
        raise SpecError(f"missing ':' in group spec {text!r}")
    try:
        if kind == "cyclic":
            return groups.cyclic(_int(rest, "cyclic order"))
        if kind == "elab":
            m = re.fullmatch(r"(\d+)\^(\d+)", rest.strip())
            if not m:
                raise SpecError(f"expected elab:<p>^<k>, got {text!r}")
            return groups.elementary_abelian(int(m[1]), int(m[2]))
        if kind == "xs+":
            return groups.extraspecial_plus(_int(rest, "prime"))
        if kind == "xs-":
            return groups.extraspecial_minus(_int(rest, "prime"))
        if kind in ("dihedral", "quaternion", "semidihedral"):
            return getattr(groups, kind)(_int(rest, f"{kind} order"))
        if kind == "prod":
            parts = [s for s in rest.split("*")]
            if len(parts) < 2 or not all(parts):
                raise SpecError(f"expected prod:<spec>*<spec>, got {text!r}")
            out = parse_group_spec(parts[0])
            for part in parts[1:]:
                out = groups.direct_product(out, parse_group_spec(part))
            return out
        if kind == "perm":
            return _parse_perm(rest)
        if kind == "table":
            if not rest.startswith("@"):
                raise SpecError("expected table:@<path>")
            return groups.load_table(rest[1:])
    except groups.OrderCapExceeded:
        raise
    except SpecError:
        raise
    except (GroupError, OSError, ValueError) as exc:
        raise SpecError(f"{text!r}: {exc}") from None
    raise SpecError(f"unknown group family {kind!r}")


def _parse_perm(rest: str) -> Group:
    m = re.fullmatch(r"\s*n=(\d+);gens=(.*)", rest, flags=re.S)
    if not m:
        raise SpecError("expected perm:n=<n>;gens=<cycles;...>")
    n = int(m[1])
    gens = [groups.perm_from_cycles(n, c) for c in m[2].split(";") if c.strip()]
    return groups.close_generators(n, gens)


def spec_fingerprint(text: str) -> str:
    """Hash of the spec plus, for ``table:@`` inputs, the file contents."""
    h = hashlib.sha256(text.strip().encode())
    for m in re.finditer(r"table:@([^*]+)", text):
        try:
            h.update(Path(m[1]).read_bytes())
        except OSError:
            pass
    return h.hexdigest()
