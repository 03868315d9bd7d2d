"""Group-specification language.

::

    spec  := atom | "directprod(" spec "," spec ")" | "quotient(" spec "," subref ")"
    atom  := "cyclic" INT | "dihedral" INT | "quaternion" INT | "sym" INT | "alt" INT
           | "abelian" INT+ | "perm" STRING+ | "extraspecial" INT INT SIGN
           | "familyB" p=INT a=INT mna=(spec) | "familyC1" p=INT a=INT q_mna=(spec)
           | "familyC2" p= m= k= q= [n=] | "familyC3" p= m= k= q= [n=]
           | "familyC4" q= shape=elementary k= p= a= | "familyC4" q= shape=extraspecial sign= p= a= [n=]
           | "mnapq" p= k= q= [b=] | "typeB" p= alpha= beta= rho= sigma=
           | "U" p= m= | "UmodD" p= m= | "UmodN" p= m= index=
           | "present" "<" ... ">"
    subref := "center" | "derived" | "frattini" | "ids" INT+

Cycle strings in ``perm`` are 1-based.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from . import groups
from .errors import SpecSyntaxError

SIMPLE = {"cyclic": 1, "dihedral": 1, "quaternion": 1, "sym": 1, "alt": 1}

KEYWORD = {
    "familyB": (("p", "a", "mna"), ()),
    "familyC1": (("p", "a", "q_mna"), ()),
    "familyC2": (("p", "m", "k", "q"), ("n",)),
    "familyC3": (("p", "m", "k", "q"), ("n",)),
    "familyC4": (("q", "shape", "p", "a"), ("k", "n", "sign", "order")),
    "mnapq": (("p", "k", "q"), ("b",)),
    "typeB": (("p", "alpha", "beta", "rho", "sigma"), ()),
    "U": (("p", "m"), ()),
    "UmodD": (("p", "m"), ()),
    "UmodN": (("p", "m", "index"), ()),
}

SPEC_VALUED = {"mna", "q_mna"}
WORD_VALUED = {"shape", "sign"}
SUBREFS = ("center", "derived", "frattini", "ids")


@dataclass(frozen=True)
class GroupSpec:
    kind: str
    args: tuple = ()
    params: tuple = ()
    children: tuple = field(default=())

    def param(self, key, default=None):
        return dict(self.params).get(key, default)

    def __str__(self):
        if self.kind == "directprod":
            return f"directprod({self.children[0]}, {self.children[1]})"
        if self.kind == "quotient":
            ref = " ".join(str(a) for a in self.args)
            return f"quotient({self.children[0]}, {ref})"
        if self.kind == "perm":
            return "perm " + " ".join(f'"{a}"' for a in self.args)
        if self.kind == "present":
            return f"present {self.args[0]}"
        parts = [self.kind] + [str(a) for a in self.args]
        for k, v in self.params:
            parts.append(f"{k}=({v})" if isinstance(v, GroupSpec) else f"{k}={v}")
        return " ".join(parts)


_INT = re.compile(r"-?\d+")
_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


class _Parser:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def error(self, msg, pos=None):
        raise SpecSyntaxError(msg, self.pos if pos is None else pos)

    def ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def at_end(self):
        self.ws()
        return self.pos >= len(self.text)

    def peek_char(self):
        self.ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch):
        if self.peek_char() != ch:
            self.error(f"expected {ch!r}")
        self.pos += 1

    def name(self):
        self.ws()
        m = _NAME.match(self.text, self.pos)
        if not m:
            self.error("expected a name")
        self.pos = m.end()
        return m.group()

    def integer(self):
        self.ws()
        m = _INT.match(self.text, self.pos)
        if not m:
            self.error("expected an integer")
        self.pos = m.end()
        return int(m.group())

    def string(self):
        self.ws()
        if self.peek_char() != '"':
            self.error("expected a quoted string")
        end = self.text.find('"', self.pos + 1)
        if end < 0:
            self.error("unterminated string")
        s = self.text[self.pos + 1: end]
        self.pos = end + 1
        return s

    def spec(self):
        start = self._skip()
        word = self.name()
        if word in ("directprod", "quotient"):
            self.expect("(")
            first = self.spec()
            self.expect(",")
            if word == "directprod":
                second = self.spec()
                self.expect(")")
                return GroupSpec("directprod", children=(first, second))
            ref = self.subref()
            self.expect(")")
            return GroupSpec("quotient", args=ref, children=(first,))
        if word in SIMPLE:
            return GroupSpec(word, args=(self.integer(),))
        if word == "abelian":
            vals = [self.integer()]
            while _INT.match(self.text, self._skip()):
                vals.append(self.integer())
            return GroupSpec(word, args=tuple(vals))
        if word == "perm":
            vals = [self.string()]
            while self.peek_char() == '"':
                vals.append(self.string())
            return GroupSpec(word, args=tuple(vals))
        if word == "extraspecial":
            q, n = self.integer(), self.integer()
            self.ws()
            if self.pos < len(self.text) and self.text[self.pos] in "+-":
                sign = self.text[self.pos]
                self.pos += 1
            else:
                sign = self.name()
            return GroupSpec(word, args=(q, n, sign))
        if word == "present":
            self.ws()
            if self.peek_char() != "<":
                self.error("expected '<'")
            end = self.text.find(">", self.pos)
            if end < 0:
                self.error("unterminated presentation")
            text = self.text[self.pos: end + 1]
            self.pos = end + 1
            return GroupSpec(word, args=(text,))
        if word in KEYWORD:
            return GroupSpec(word, params=self.keywords(word))
        self.error(f"unknown constructor {word!r}", start)

    def _skip(self):
        self.ws()
        return self.pos

    def keywords(self, word):
        required, optional = KEYWORD[word]
        seen = {}
        while True:
            save = self.pos
            self.ws()
            m = _NAME.match(self.text, self.pos)
            if not m or not self.text[m.end():].lstrip().startswith("="):
                self.pos = save
                break
            key = m.group()
            keypos = self.pos
            self.pos = m.end()
            self.expect("=")
            if key not in required and key not in optional:
                self.error(f"{word} does not take parameter {key!r}", keypos)
            if key in seen:
                self.error(f"parameter {key!r} given twice", keypos)
            if key in SPEC_VALUED:
                self.expect("(")
                val = self.spec()
                self.expect(")")
            elif key in WORD_VALUED:
                self.ws()
                if self.pos < len(self.text) and self.text[self.pos] in "+-":
                    val = self.text[self.pos]
                    self.pos += 1
                else:
                    val = self.name()
            else:
                val = self.integer()
            seen[key] = val
        missing = [k for k in required if k not in seen]
        if missing:
            self.error(f"{word} is missing parameter(s) {', '.join(missing)}")
        order = list(required) + list(optional)
        return tuple((k, seen[k]) for k in order if k in seen)

    def subref(self):
        start = self._skip()
        word = self.name()
        if word not in SUBREFS:
            self.error(f"unknown subgroup reference {word!r}", start)
        if word != "ids":
            return (word,)
        ids = [self.integer()]
        while _INT.match(self.text, self._skip()):
            ids.append(self.integer())
        return ("ids",) + tuple(ids)


def parse_spec(text):
    p = _Parser(text)
    spec = p.spec()
    if not p.at_end():
        p.error(f"trailing input {p.text[p.pos:]!r}")
    return spec


# -- building ------------------------------------------------------------------------

_U_CACHE = {}


def universal_context(p, m):
    from .universal import build_U

    key = (p, m)
    if key not in _U_CACHE:
        _U_CACHE[key] = build_U(p, m)
    return _U_CACHE[key]


def script_N(p, m):
    from .universal import enumerate_script_N

    ctx = universal_context(p, m)
    Ns = ctx.__dict__.get("_script_N")
    if Ns is None:
        Ns = enumerate_script_N(ctx)
        ctx._script_N = Ns
    return Ns


def build(spec):
    """Construct the group described by ``spec`` (text or parsed)."""
    from . import families
    from .coset_enum import parse_presentation, presented_group
    from .core import direct_product
    from .structure import center, derived_subgroup, frattini, generate, quotient
    from .universal import quotient_UN, subgroup_D

    if isinstance(spec, str):
        spec = parse_spec(spec)
    k = spec.kind
    P = dict(spec.params)
    label = str(spec)
    if k == "cyclic":
        G = groups.cyclic(spec.args[0])
    elif k == "dihedral":
        G = groups.dihedral(spec.args[0])
    elif k == "quaternion":
        G = groups.dicyclic(spec.args[0])
    elif k == "sym":
        G = groups.symmetric(spec.args[0])
    elif k == "alt":
        G = groups.alternating(spec.args[0])
    elif k == "abelian":
        G = groups.abelian(spec.args)
    elif k == "perm":
        G = groups.from_cycles(spec.args, one_based=True)
    elif k == "extraspecial":
        G = families.extraspecial(*spec.args)
    elif k == "present":
        G = presented_group(parse_presentation(spec.args[0]))
    elif k == "directprod":
        G = direct_product(build(spec.children[0]), build(spec.children[1]))
    elif k == "quotient":
        H = build(spec.children[0])
        ref = spec.args
        if ref[0] == "center":
            N = center(H)
        elif ref[0] == "derived":
            N = derived_subgroup(H)
        elif ref[0] == "frattini":
            N = frattini(H)
        else:
            bad = [i for i in ref[1:] if not 0 <= i < H.order]
            if bad:
                raise ValueError(f"element ids {bad} out of range for order {H.order}")
            N = generate(H, ref[1:])
        G = quotient(H, N)
    elif k == "familyB":
        G = families.family_B(P["p"], P["a"], build(P["mna"]))
    elif k == "familyC1":
        G = families.family_C1(P["p"], P["a"], build(P["q_mna"]))
    elif k == "familyC2":
        G = families.family_C2(P["p"], P["m"], P["k"], P["q"], P.get("n", 1))
    elif k == "familyC3":
        G = families.family_C3(P["p"], P["m"], P["k"], P["q"], P.get("n", 1))
    elif k == "familyC4":
        G = families.family_C4(
            P["q"], P["shape"], P["p"], P["a"], k=P.get("k"), n=P.get("n", 1), sign=P.get("sign", "+"),
            action_order=P.get("order"),
        )
    elif k == "mnapq":
        G = families.minimal_nonabelian_pq(P["p"], P["k"], P["q"], P.get("b", 1))
    elif k == "typeB":
        G = families.typeB_presentation(P["p"], P["alpha"], P["beta"], P["rho"], P["sigma"])
    elif k == "U":
        G = universal_context(P["p"], P["m"]).U
    elif k == "UmodD":
        ctx = universal_context(P["p"], P["m"])
        key = "_UmodD"
        G = ctx.__dict__.get(key)
        if G is None:
            G = quotient(ctx.U, subgroup_D(ctx))
            setattr(ctx, key, G)
    elif k == "UmodN":
        Ns = script_N(P["p"], P["m"])
        i = P["index"]
        if not 0 <= i < len(Ns):
            raise ValueError(f"index {i} out of range: there are {len(Ns)} members for p={P['p']}, m={P['m']}")
        G = quotient_UN(universal_context(P["p"], P["m"]), Ns[i])
    else:
        raise SpecSyntaxError(f"unknown constructor {k!r}")
    G.info.setdefault("spec", label)
    if G.name is None or k in ("U", "UmodD", "UmodN", "perm", "present", "directprod", "quotient"):
        G.name = G.name if k == "U" else label
    return G
