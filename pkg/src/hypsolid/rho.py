"""The term-map families attached to a hypersubstitution.

Four kinds: the plain extension, the mutually recursive fa/sa pair that
applies the hypersubstitution at alternating levels (fa starts at the
root, sa one level below), and gamma(n), which keeps the top n levels of
a term intact and applies the extension underneath.
"""

from __future__ import annotations

from dataclasses import dataclass

from .terms import CapExceeded, ParseError, Term, Var, app, var
from .hypersubstitutions import Hypersubstitution, app_image, compose, extend_apply

__all__ = [
    "RhoKind",
    "apply_rho",
    "generate_F",
    "check_gamma_homomorphism",
]


@dataclass(frozen=True)
class RhoKind:
    name: str  # "ext" | "fa" | "sa" | "gamma"
    level: int = 0

    def __post_init__(self):
        if self.name not in ("ext", "fa", "sa", "gamma"):
            raise ValueError(f"unknown rho kind {self.name!r}")
        if self.name == "gamma" and self.level < 0:
            raise ValueError("gamma level must be >= 0")
        if self.name != "gamma" and self.level != 0:
            raise ValueError(f"{self.name} takes no level")

    @classmethod
    def ext(cls):
        return cls("ext")

    @classmethod
    def fa(cls):
        return cls("fa")

    @classmethod
    def sa(cls):
        return cls("sa")

    @classmethod
    def gamma(cls, n: int):
        return cls("gamma", n)

    @classmethod
    def parse(cls, text: str) -> "RhoKind":
        """Parse the CLI spelling: ext | fa | sa | gamma:<n>."""
        text = text.strip()
        if text in ("ext", "fa", "sa"):
            return cls(text)
        if text.startswith("gamma:"):
            try:
                return cls("gamma", int(text.split(":", 1)[1]))
            except ValueError:
                pass
        raise ParseError(f"bad rho kind {text!r}; expected ext|fa|sa|gamma:<n>")

    def render(self) -> str:
        return f"gamma:{self.level}" if self.name == "gamma" else self.name


def _alternating(h: Hypersubstitution, t: Term, apply_here: bool) -> Term:
    # parity flips on every level: fa applies the image here, sa one level down
    if isinstance(t, Var):
        return t
    children = [_alternating(h, c, not apply_here) for c in t.children]
    if apply_here:
        return app_image(h, t.symbol, children)
    return app(t.symbol, children)


def _gamma(h: Hypersubstitution, t: Term, n: int) -> Term:
    if n == 0:
        return extend_apply(h, t)
    if isinstance(t, Var):
        return t
    return app(t.symbol, [_gamma(h, c, n - 1) for c in t.children])


def apply_rho(kind: RhoKind, h: Hypersubstitution, t: Term) -> Term:
    if kind.name == "ext":
        return extend_apply(h, t)
    if kind.name == "fa":
        return _alternating(h, t, True)
    if kind.name == "sa":
        return _alternating(h, t, False)
    return _gamma(h, t, kind.level)


def generate_F(m: int, padding_var: int = 4, symbol: str = "f", cap: int = 4096):
    """The doubling family of padded associativity identities.

    Level 0 is the associative law over x1,x2,x3; each further level pads
    both sides of every identity with the fixed variable (default x4), once
    on the right and once on the left.  Size doubles per level.
    """
    if m < 0:
        raise ValueError("m must be >= 0")
    if 2 ** m > cap:
        raise CapExceeded(f"|F_{m}| = {2 ** m} exceeds cap {cap}")
    x, y, z = var(1), var(2), var(3)
    w = var(padding_var)
    family = [(app(symbol, [app(symbol, [x, y]), z]), app(symbol, [x, app(symbol, [y, z])]))]
    for _ in range(m):
        family = [(app(symbol, [s, w]), app(symbol, [t, w])) for s, t in family] + [
            (app(symbol, [w, s]), app(symbol, [w, t])) for s, t in family
        ]
    return family


def check_gamma_homomorphism(
    h1: Hypersubstitution, h2: Hypersubstitution, n: int, sample
) -> bool:
    """True iff gamma(n) of the product equals the composition of the
    individual gamma(n) maps on every sampled term."""
    kind = RhoKind.gamma(n)
    h12 = compose(h1, h2)
    return all(
        apply_rho(kind, h12, t) == apply_rho(kind, h1, apply_rho(kind, h2, t))
        for t in sample
    )
