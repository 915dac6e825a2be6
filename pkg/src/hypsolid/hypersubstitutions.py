"""Hypersubstitutions, their term-map extensions, and the monoid structure."""

from __future__ import annotations

import itertools

from .terms import (
    CapExceeded,
    ParseError,
    Signature,
    Term,
    Var,
    app,
    enumerate_terms,
    parse_term,
    render_term,
    superpose,
    var,
)

__all__ = [
    "Hypersubstitution",
    "make_hypersubstitution",
    "identity_hyp",
    "extend_apply",
    "compose",
    "hyp_equal",
    "parse_hypersubstitution",
    "render_hypersubstitution",
    "enumerate_hypersubstitutions",
]


class Hypersubstitution:
    """A map sending each n-ary symbol to an n-ary term (variables allowed)."""

    __slots__ = ("sig", "images", "_h")

    def __init__(self, sig: Signature, images):
        # images: tuple of Terms aligned with sig.symbols
        images = tuple(images)
        if len(images) != len(sig):
            raise ValueError("one image per symbol required")
        self.sig = sig
        self.images = images
        self._h = hash((sig, images))

    def image(self, name: str) -> Term:
        return self.images[self.sig.position(name)]

    def __eq__(self, other):
        return (
            isinstance(other, Hypersubstitution)
            and self.sig == other.sig
            and self.images == other.images
        )

    def __hash__(self):
        return self._h

    def __repr__(self):
        inner = ", ".join(
            f"{name} -> {render_term(img)}"
            for (name, _), img in zip(self.sig.symbols, self.images)
        )
        return f"Hypersubstitution({inner})"


def _check_image(sig: Signature, name: str, arity: int, image: Term) -> None:
    stack = [image]
    while stack:
        node = stack.pop()
        if isinstance(node, Var):
            if node.index > arity:
                raise ValueError(
                    f"image of {name!r} uses x{node.index}, beyond its arity {arity}"
                )
        else:
            if node.symbol not in sig:
                raise ValueError(f"image of {name!r} uses unknown symbol {node.symbol!r}")
            if len(node.children) != sig.arity(node.symbol):
                raise ValueError(
                    f"image of {name!r} applies {node.symbol!r} with wrong arity"
                )
            stack.extend(node.children)


def make_hypersubstitution(sig: Signature, images) -> Hypersubstitution:
    """Validate and build a hypersubstitution from a name->Term mapping."""
    images = dict(images)
    extra = set(images) - set(sig.names)
    if extra:
        raise ValueError(f"images given for symbols outside the signature: {sorted(extra)}")
    ordered = []
    for name, arity in sig.symbols:
        if name not in images:
            raise ValueError(f"missing image for symbol {name!r}")
        image = images[name]
        _check_image(sig, name, arity, image)
        ordered.append(image)
    return Hypersubstitution(sig, ordered)


def identity_hyp(sig: Signature) -> Hypersubstitution:
    """The identity element: each f maps to f(x1,...,xn)."""
    return Hypersubstitution(
        sig, [app(name, [var(i) for i in range(1, a + 1)]) for name, a in sig.symbols]
    )


def extend_apply(h: Hypersubstitution, t: Term) -> Term:
    """The extension of ``h`` to all terms: variables fixed, applications
    superpose the symbol's image over the extended children."""
    if isinstance(t, Var):
        return t
    return app_image(h, t.symbol, [extend_apply(h, c) for c in t.children])


def app_image(h: Hypersubstitution, symbol: str, children) -> Term:
    return superpose(h.image(symbol), children)


def compose(h1: Hypersubstitution, h2: Hypersubstitution) -> Hypersubstitution:
    """Monoid product: (h1 . h2)(f) is h1's extension applied to h2(f)."""
    if h1.sig != h2.sig:
        raise ValueError("cannot compose hypersubstitutions over different signatures")
    return Hypersubstitution(h1.sig, [extend_apply(h1, img) for img in h2.images])


def hyp_equal(h1: Hypersubstitution, h2: Hypersubstitution) -> bool:
    return h1 == h2


def parse_hypersubstitution(text: str, sig: Signature) -> Hypersubstitution:
    """Parse ``<symbol> -> <term>`` lines, one per symbol of the signature."""
    images: dict[str, Term] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "->" not in line:
            raise ParseError(f"line {lineno}: expected '<symbol> -> <term>', got {line!r}")
        name, term_text = line.split("->", 1)
        name = name.strip()
        if name not in sig:
            raise ParseError(f"line {lineno}: unknown symbol {name!r}")
        if name in images:
            raise ParseError(f"line {lineno}: duplicate image for {name!r}")
        images[name] = parse_term(term_text.strip(), sig)
    try:
        return make_hypersubstitution(sig, images)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def render_hypersubstitution(h: Hypersubstitution) -> str:
    return "\n".join(
        f"{name} -> {render_term(img)}"
        for (name, _), img in zip(h.sig.symbols, h.images)
    )


def enumerate_hypersubstitutions(sig: Signature, max_image_depth: int, cap: int = 100_000):
    """All hypersubstitutions whose images have depth <= max_image_depth.

    Image candidates for an n-ary symbol range over terms in x1..xn;
    deterministic order follows ``enumerate_terms`` per symbol.
    """
    pools = [
        enumerate_terms(sig, max_image_depth, arity, cap=cap) for _, arity in sig.symbols
    ]
    count = 1
    for pool in pools:
        count *= len(pool)
    if count > cap:
        raise CapExceeded(f"{count} hypersubstitutions exceed cap {cap}")
    return [Hypersubstitution(sig, images) for images in itertools.product(*pools)]
