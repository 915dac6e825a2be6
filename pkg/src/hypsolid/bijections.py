"""Deciding which hypersubstitutions act bijectively on all terms.

The certificate form (a symbol bijection plus one variable permutation per
symbol) is checked purely syntactically; a bounded brute-force oracle
cross-validates it on finite term universes.  A violation reported by the
oracle is a genuine counterexample; ``consistent`` is evidence, not proof.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .terms import CapExceeded, Signature, Term, Var, app, enumerate_terms, var
from .hypersubstitutions import Hypersubstitution, extend_apply

__all__ = [
    "BijCertificate",
    "BijOracleVerdict",
    "bij_certificate",
    "invert",
    "enumerate_bijective",
    "oracle_bijectivity_bounded",
]


@dataclass(frozen=True)
class BijCertificate:
    """h maps each symbol to an equal-arity symbol bijectively; perm[f][k-1]
    is the variable index in position k of the image of f."""

    symbol_map: tuple[tuple[str, str], ...]
    permutations: tuple[tuple[str, tuple[int, ...]], ...]

    def h(self, name: str) -> str:
        return dict(self.symbol_map)[name]

    def p(self, name: str) -> tuple[int, ...]:
        return dict(self.permutations)[name]


def bij_certificate(h: Hypersubstitution) -> BijCertificate | None:
    """The unique certificate of bijectivity, or None when the image shape
    (single application node over a full variable permutation, symbol map
    an arity-preserving bijection) is not met."""
    sig = h.sig
    symbol_map = []
    perms = []
    for (name, arity), image in zip(sig.symbols, h.images):
        if isinstance(image, Var):
            return None
        if any(not isinstance(c, Var) for c in image.children):
            return None
        indices = tuple(c.index for c in image.children)
        if sorted(indices) != list(range(1, arity + 1)):
            return None
        if sig.arity(image.symbol) != arity:
            return None
        symbol_map.append((name, image.symbol))
        perms.append((name, indices))
    targets = [t for _, t in symbol_map]
    if len(set(targets)) != len(targets):
        return None
    return BijCertificate(tuple(symbol_map), tuple(perms))


def invert(h: Hypersubstitution) -> Hypersubstitution:
    """Two-sided inverse of a certified hypersubstitution."""
    cert = bij_certificate(h)
    if cert is None:
        raise ValueError("hypersubstitution is not bijective (no certificate)")
    images: dict[str, Term] = {}
    for (name, target), (_, perm) in zip(cert.symbol_map, cert.permutations):
        n = len(perm)
        inverse_perm = [0] * n
        for pos, image_index in enumerate(perm, start=1):
            inverse_perm[image_index - 1] = pos
        images[target] = app(name, [var(i) for i in inverse_perm])
    ordered = [images[name] for name, _ in h.sig.symbols]
    return Hypersubstitution(h.sig, ordered)


def _arity_classes(sig: Signature):
    classes: dict[int, list[str]] = {}
    for name, arity in sig.symbols:
        classes.setdefault(arity, []).append(name)
    # first-occurrence order of arities keeps the enumeration deterministic
    ordered = []
    for name, arity in sig.symbols:
        if arity not in [a for a, _ in ordered]:
            ordered.append((arity, classes[arity]))
    return ordered


def enumerate_bijective(sig: Signature, cap: int = 1_000_000):
    """All certified hypersubstitutions: symbol bijections range over each
    arity class independently, then every per-symbol variable permutation."""
    classes = _arity_classes(sig)
    count = 1
    for _, names in classes:
        count *= math.factorial(len(names))
    for _, arity in sig.symbols:
        count *= math.factorial(arity)
    if count > cap:
        raise CapExceeded(f"{count} bijective hypersubstitutions exceed cap {cap}")

    out = []
    class_perms = [itertools.permutations(names) for _, names in classes]
    for targets_by_class in itertools.product(*class_perms):
        h_map = {}
        for (_, names), targets in zip(classes, targets_by_class):
            h_map.update(zip(names, targets))
        per_symbol = [
            itertools.permutations(range(1, arity + 1)) for _, arity in sig.symbols
        ]
        for perm_choice in itertools.product(*per_symbol):
            images = [
                app(h_map[name], [var(i) for i in perm])
                for (name, _), perm in zip(sig.symbols, perm_choice)
            ]
            out.append(Hypersubstitution(sig, images))
    return out


@dataclass(frozen=True)
class BijOracleVerdict:
    kind: str  # "consistent" | "injectivity_violated" | "surjectivity_gap"
    collision: tuple[Term, Term] | None = None
    missing: Term | None = None

    @property
    def is_violation(self) -> bool:
        return self.kind != "consistent"


def oracle_bijectivity_bounded(
    h: Hypersubstitution, max_depth: int, max_var: int, cap: int = 500_000
) -> BijOracleVerdict:
    """Apply the extension of ``h`` to a bounded universe.

    A collision proves non-injectivity.  A term of depth <= max_depth - D
    (D the largest image depth) with no preimage inside the universe is
    reported as a surjectivity gap within the bound.  No violation found
    is consistent with bijectivity, nothing more.
    """
    universe = enumerate_terms(h.sig, max_depth, max_var, cap=cap)
    seen: dict[Term, Term] = {}
    for t in universe:
        image = extend_apply(h, t)
        first = seen.get(image)
        if first is not None:
            return BijOracleVerdict("injectivity_violated", collision=(first, t))
        seen[image] = t

    gap_depth = max_depth - max(img.depth for img in h.images)
    if gap_depth >= 0:
        images = set(seen)
        for t in universe:
            if t.depth > gap_depth:
                break  # universe is ordered by depth
            if t not in images:
                return BijOracleVerdict("surjectivity_gap", missing=t)
    return BijOracleVerdict("consistent")
