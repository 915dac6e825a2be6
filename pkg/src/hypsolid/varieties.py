"""Semigroup words, bounded equational reasoning, and solidity checks.

Membership of an identity in the equational theory of a presentation is
semidecidable, so every consumer works with a three-valued verdict:

* ``proved``     -- a bounded breadth-first rewrite chain was found;
* ``disproved``  -- a finite model of the axioms violates the identity;
* ``unknown``    -- neither side succeeded within the budget.

Both positive directions are sound, so proved and disproved can never
collide for the same question.  Verdicts and witnesses are deterministic
for fixed budgets: the search orders are canonical and the least witness
is returned.
"""

from __future__ import annotations

import itertools
import re
from collections import deque
from dataclasses import dataclass
from functools import lru_cache

from .terms import CapExceeded, ParseError, Signature, Term, Var, app, render_term, var
from .hypersubstitutions import Hypersubstitution, render_hypersubstitution
from .rho import RhoKind, apply_rho

__all__ = [
    "Word",
    "Identity",
    "VarietyPresentation",
    "FiniteSemigroup",
    "Budget",
    "Verdict",
    "DerivationStep",
    "DerivationTrace",
    "CounterModel",
    "BudgetReport",
    "SEMIGROUP_SIGNATURE",
    "word_from_text",
    "word_to_text",
    "parse_identity",
    "parse_presentation",
    "words_from_texts",
    "term_to_word",
    "bracketings",
    "derive",
    "refute",
    "decide",
    "enumerate_finite_semigroups",
    "check_rho_solidity",
    "classify_gamma_solid",
    "check_bij2_sa_criteria",
    "check_bij2_fa_criteria",
    "SolidityReport",
    "SolidityViolation",
    "CriteriaReport",
    "TriggerScan",
]

Word = tuple  # non-empty tuple of variable indices

#: The single binary symbol used for semigroup terms.
SEMIGROUP_SIGNATURE = Signature([("f", 2)])

_WORD_TOKEN = re.compile(r"[A-Za-z]\d*")
_ALIAS = {"x": 1, "y": 2, "z": 3, "u": 4, "v": 5, "w": 6}


def _word_tokens(text: str) -> list[str]:
    compact = "".join(text.split())
    if not compact:
        raise ParseError("empty word")
    tokens = _WORD_TOKEN.findall(compact)
    if "".join(tokens) != compact:
        raise ParseError(f"bad word {text!r}")
    return tokens


def _fixed_index(token: str) -> int | None:
    if token in _ALIAS:
        return _ALIAS[token]
    if token.startswith("x") and len(token) > 1:
        index = int(token[1:])
        if index < 1:
            raise ParseError(f"bad variable {token!r}")
        return index
    return None


def words_from_texts(texts) -> list[Word]:
    """Parse several words under one variable scope.

    ``x<k>`` and the alias letters x,y,z,u,v,w carry fixed indices; any
    other letter token (``y1``, ``a`` ...) is a fresh variable, numbered
    past the fixed ones in first-occurrence order.
    """
    token_lists = [_word_tokens(t) for t in texts]
    fixed_max = 0
    for tokens in token_lists:
        for tok in tokens:
            index = _fixed_index(tok)
            if index is not None:
                fixed_max = max(fixed_max, index)
    fresh: dict[str, int] = {}
    out = []
    for tokens in token_lists:
        word = []
        for tok in tokens:
            index = _fixed_index(tok)
            if index is None:
                if tok not in fresh:
                    fresh[tok] = fixed_max + len(fresh) + 1
                index = fresh[tok]
            word.append(index)
        out.append(tuple(word))
    return out


def word_from_text(text: str) -> Word:
    """Parse a single word, e.g. ``xyx``, ``x1x2x1``, or ``x1 x2 x1``."""
    return words_from_texts([text])[0]


def word_to_text(word: Word) -> str:
    return "".join(f"x{i}" for i in word)


@dataclass(frozen=True)
class Identity:
    lhs: Word
    rhs: Word

    def __post_init__(self):
        if not self.lhs or not self.rhs:
            raise ValueError("identity sides must be non-empty words")

    def variables(self) -> tuple[int, ...]:
        return tuple(sorted(set(self.lhs) | set(self.rhs)))

    def render(self) -> str:
        return f"{word_to_text(self.lhs)} = {word_to_text(self.rhs)}"


def parse_identity(text: str) -> Identity:
    if text.count("=") != 1:
        raise ParseError(f"expected '<word> = <word>', got {text!r}")
    lhs, rhs = words_from_texts(text.split("="))
    return Identity(lhs, rhs)


@dataclass(frozen=True)
class VarietyPresentation:
    """A finite axiom set; associativity is implicit in the word encoding.
    Axioms are deduplicated modulo swapping the two sides."""

    axioms: tuple[Identity, ...] = ()

    def __post_init__(self):
        seen = set()
        kept = []
        for ax in self.axioms:
            key = (min(ax.lhs, ax.rhs), max(ax.lhs, ax.rhs))
            if key not in seen:
                seen.add(key)
                kept.append(ax)
        object.__setattr__(self, "axioms", tuple(kept))

    def render(self) -> str:
        return "\n".join(ax.render() for ax in self.axioms)


def parse_presentation(text: str) -> VarietyPresentation:
    """Parse ``<word> = <word>`` lines (``#`` starts a comment)."""
    axioms = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            axioms.append(parse_identity(line))
        except ParseError as exc:
            raise ParseError(f"line {lineno}: {exc}") from None
    return VarietyPresentation(tuple(axioms))


class FiniteSemigroup:
    """A labeled multiplication table; associativity is checked on
    construction."""

    __slots__ = ("order", "table")

    def __init__(self, order: int, table):
        table = tuple(tuple(int(v) for v in row) for row in table)
        if order < 1 or len(table) != order or any(len(row) != order for row in table):
            raise ValueError("table must be order x order")
        if any(v < 0 or v >= order for row in table for v in row):
            raise ValueError("table entries must lie in 0..order-1")
        for x in range(order):
            for y in range(order):
                for z in range(order):
                    if table[table[x][y]][z] != table[x][table[y][z]]:
                        raise ValueError(f"not associative at ({x},{y},{z})")
        self.order = order
        self.table = table

    def evaluate(self, word: Word, env) -> int:
        it = iter(word)
        acc = env[next(it)]
        for v in it:
            acc = self.table[acc][env[v]]
        return acc

    def satisfies(self, identity: Identity) -> bool:
        vs = identity.variables()
        for values in itertools.product(range(self.order), repeat=len(vs)):
            env = dict(zip(vs, values))
            if self.evaluate(identity.lhs, env) != self.evaluate(identity.rhs, env):
                return False
        return True

    def __eq__(self, other):
        return (
            isinstance(other, FiniteSemigroup)
            and self.order == other.order
            and self.table == other.table
        )

    def __hash__(self):
        return hash(self.table)

    def __repr__(self):
        return f"FiniteSemigroup(order={self.order}, table={self.table})"


@dataclass(frozen=True)
class Budget:
    max_word_len: int = 8
    max_subst_len: int = 3
    max_nodes: int = 200_000

    def to_dict(self):
        return {
            "max_word_len": self.max_word_len,
            "max_subst_len": self.max_subst_len,
            "max_nodes": self.max_nodes,
        }


DEFAULT_BUDGET = Budget()
DEFAULT_MAX_ORDER = 4


@dataclass(frozen=True)
class DerivationStep:
    word: Word
    axiom: Identity | None  # None on the start word
    reversed: bool = False
    position: int = 0

    def to_dict(self):
        return {
            "word": word_to_text(self.word),
            "axiom": self.axiom.render() if self.axiom else None,
            "reversed": self.reversed,
            "position": self.position,
        }


@dataclass(frozen=True)
class DerivationTrace:
    steps: tuple[DerivationStep, ...]

    def to_dict(self):
        return {"type": "derivation", "steps": [s.to_dict() for s in self.steps]}


@dataclass(frozen=True)
class CounterModel:
    model: FiniteSemigroup
    assignment: tuple[tuple[int, int], ...]  # (variable index, element) pairs

    def to_dict(self):
        return {
            "type": "counter_model",
            "order": self.model.order,
            "table": [list(row) for row in self.model.table],
            "assignment": {f"x{v}": e for v, e in self.assignment},
        }


@dataclass(frozen=True)
class BudgetReport:
    reason: str

    def to_dict(self):
        return {"type": "budget", "reason": self.reason}


@dataclass(frozen=True)
class Verdict:
    status: str  # "proved" | "disproved" | "unknown"
    witness: object = None
    budget_used: tuple[tuple[str, int], ...] = ()

    def to_dict(self):
        return {
            "status": self.status,
            "witness": self.witness.to_dict() if self.witness is not None else None,
            "budget_used": dict(self.budget_used),
        }


def term_to_word(t: Term) -> Word:
    """In-order variable leaves of a term over a single binary symbol."""
    out = []
    stack = [t]
    while stack:
        node = stack.pop()
        if isinstance(node, Var):
            out.append(node.index)
        else:
            if len(node.children) != 2:
                raise ValueError("term_to_word needs a single binary symbol signature")
            stack.append(node.children[1])
            stack.append(node.children[0])
    return tuple(out)


def bracketings(word: Word, symbol: str = "f", max_len: int = 6):
    """All binary trees over the word's leaves (Catalan many), left-heavy
    trees first."""
    word = tuple(word)
    if not word:
        raise ValueError("empty word has no bracketings")
    if len(word) > max_len:
        raise CapExceeded(f"word of length {len(word)} exceeds bracketing cap {max_len}")

    def build(w):
        if len(w) == 1:
            return [var(w[0])]
        out = []
        for i in range(len(w) - 1, 0, -1):
            for left in build(w[:i]):
                for right in build(w[i:]):
                    out.append(app(symbol, [left, right]))
        return out

    return build(word)


# ---------------------------------------------------------------------------
# bounded derivation (the "proved" side)
# ---------------------------------------------------------------------------


def _matches(pattern: Word, factor: Word, max_block: int):
    """All ways to split ``factor`` into one non-empty block per pattern
    letter, repeated letters binding the same block, blocks capped at
    ``max_block`` letters.  Yields {letter: block} dicts."""

    def go(pi, fi, binding):
        if pi == len(pattern):
            if fi == len(factor):
                yield dict(binding)
            return
        rest = len(pattern) - pi - 1
        letter = pattern[pi]
        bound = binding.get(letter)
        if bound is not None:
            end = fi + len(bound)
            if end + rest <= len(factor) and factor[fi:end] == bound:
                yield from go(pi + 1, end, binding)
            return
        limit = min(max_block, len(factor) - fi - rest)
        for size in range(1, limit + 1):
            binding[letter] = factor[fi : fi + size]
            yield from go(pi + 1, fi + size, binding)
            del binding[letter]

    yield from go(0, 0, {})


def _instance(replacement: Word, binding) -> Word:
    return tuple(itertools.chain.from_iterable(binding[v] for v in replacement))


class _Rewriter:
    """Single-step rewriting under a presentation over a fixed alphabet.

    A step replaces a factor matching one axiom side by the corresponding
    instance of the other side; letters occurring only in the replacement
    range over words of bounded length, shortest total instance first.
    """

    def __init__(self, pres: VarietyPresentation, alphabet, budget: Budget):
        self.budget = budget
        self.rules = []
        for ax in pres.axioms:
            self.rules.append((ax.lhs, ax.rhs, ax, False))
            if ax.rhs != ax.lhs:
                self.rules.append((ax.rhs, ax.lhs, ax, True))
        self.by_len = {
            size: list(itertools.product(alphabet, repeat=size))
            for size in range(1, budget.max_subst_len + 1)
        }
        self._vectors: dict[int, list] = {}

    def _length_vectors(self, k: int):
        vectors = self._vectors.get(k)
        if vectors is None:
            vectors = sorted(
                itertools.product(range(1, self.budget.max_subst_len + 1), repeat=k),
                key=lambda v: (sum(v), v),
            )
            self._vectors[k] = vectors
        return vectors

    def successors(self, u: Word):
        """Yields (new_word, axiom, reversed, position), deterministically."""
        n = len(u)
        max_word_len = self.budget.max_word_len
        for pattern, replacement, ax, rev in self.rules:
            rep_letters = []
            for letter in replacement:
                if letter not in rep_letters:
                    rep_letters.append(letter)
            for i in range(n):
                for j in range(i + 1, n + 1):
                    factor = u[i:j]
                    outer = n - len(factor)
                    for binding in _matches(pattern, factor, self.budget.max_subst_len):
                        fresh = [v for v in rep_letters if v not in binding]
                        if not fresh:
                            new = u[:i] + _instance(replacement, binding) + u[j:]
                            if len(new) <= max_word_len:
                                yield new, ax, rev, i
                            continue
                        multiplicity = [replacement.count(v) for v in fresh]
                        base = outer + sum(
                            len(binding[v]) for v in replacement if v in binding
                        )
                        for lengths in self._length_vectors(len(fresh)):
                            total = base + sum(
                                m * l for m, l in zip(multiplicity, lengths)
                            )
                            if total > max_word_len:
                                continue
                            pools = [self.by_len[l] for l in lengths]
                            for combo in itertools.product(*pools):
                                full = dict(binding)
                                full.update(zip(fresh, combo))
                                yield u[:i] + _instance(replacement, full) + u[j:], ax, rev, i


def _trace(parents, start: Word, target: Word) -> DerivationTrace:
    steps = []
    word = target
    while word != start:
        prev, axiom, rev, pos = parents[word]
        steps.append(DerivationStep(word, axiom, rev, pos))
        word = prev
    steps.append(DerivationStep(start, None))
    return DerivationTrace(tuple(reversed(steps)))


def derive(pres: VarietyPresentation, goal: Identity, budget: Budget = DEFAULT_BUDGET) -> Verdict:
    """Breadth-first closure of goal.lhs under single-step axiom rewrites.

    Sound: a proved identity holds in every model of the presentation.
    Exhaustion of the budget (or the bounded closure) yields unknown.
    """
    start, target = goal.lhs, goal.rhs
    if start == target:
        return Verdict(
            "proved",
            DerivationTrace((DerivationStep(start, None),)),
            (("nodes", 1),),
        )
    alphabet = tuple(sorted(set(start) | set(target)))
    rewriter = _Rewriter(pres, alphabet, budget)

    parents: dict[Word, tuple] = {start: None}
    queue = deque([start])
    examined = 0  # every candidate rewrite counts against the budget
    while queue:
        u = queue.popleft()
        for new, ax, rev, pos in rewriter.successors(u):
            examined += 1
            if examined >= budget.max_nodes:
                return Verdict(
                    "unknown",
                    BudgetReport(f"rewrite budget {budget.max_nodes} exhausted"),
                    (("nodes", examined), ("words", len(parents))),
                )
            if new in parents:
                continue
            parents[new] = (u, ax, rev, pos)
            if new == target:
                return Verdict(
                    "proved",
                    _trace(parents, start, target),
                    (("nodes", examined), ("words", len(parents))),
                )
            queue.append(new)
    return Verdict(
        "unknown",
        BudgetReport("bounded closure exhausted without reaching the goal"),
        (("nodes", examined), ("words", len(parents))),
    )


# ---------------------------------------------------------------------------
# finite counter-models (the "disproved" side)
# ---------------------------------------------------------------------------

_ORDER_CAP = 4


@lru_cache(maxsize=None)
def _semigroup_tables(order: int):
    """All labeled associative tables of the given order, lexicographic,
    via backtracking with incremental associativity pruning."""
    n = order
    table = [[-1] * n for _ in range(n)]
    out = []
    cells = [(i, j) for i in range(n) for j in range(n)]

    def consistent(a: int, b: int) -> bool:
        v = table[a][b]
        # triples (a, b, z)
        for z in range(n):
            q = table[b][z]
            p = table[v][z]
            if p >= 0 and q >= 0:
                r = table[a][q]
                if r >= 0 and p != r:
                    return False
        # triples (x, a, b)
        for x in range(n):
            p = table[x][a]
            if p >= 0:
                lhs = table[p][b]
                rhs = table[x][v]
                if lhs >= 0 and rhs >= 0 and lhs != rhs:
                    return False
        # triples (x, y, b) whose left product is a
        for x in range(n):
            row = table[x]
            for y in range(n):
                if row[y] == a:
                    q = table[y][b]
                    if q >= 0:
                        rhs = table[x][q]
                        if rhs >= 0 and v != rhs:
                            return False
        # triples (a, y, z) whose right product is b
        for y in range(n):
            row = table[y]
            for z in range(n):
                if row[z] == b:
                    p = table[a][y]
                    if p >= 0:
                        lhs = table[p][z]
                        if lhs >= 0 and lhs != v:
                            return False
        return True

    def fill(k: int):
        if k == len(cells):
            out.append(tuple(tuple(r) for r in table))
            return
        a, b = cells[k]
        for value in range(n):
            table[a][b] = value
            if consistent(a, b):
                fill(k + 1)
        table[a][b] = -1

    fill(0)
    return tuple(out)


def enumerate_finite_semigroups(max_order: int):
    """All labeled finite semigroups of order 1..max_order, smallest first."""
    if max_order < 1:
        raise ValueError("max_order must be >= 1")
    if max_order > _ORDER_CAP:
        raise CapExceeded(f"max_order {max_order} exceeds cap {_ORDER_CAP}")
    out = []
    for order in range(1, max_order + 1):
        for table in _semigroup_tables(order):
            out.append(FiniteSemigroup(order, table))
    return out


def _table_satisfies(table, order: int, identity: Identity) -> bool:
    vs = identity.variables()
    lhs, rhs = identity.lhs, identity.rhs
    for values in itertools.product(range(order), repeat=len(vs)):
        env = dict(zip(vs, values))
        it = iter(lhs)
        acc = env[next(it)]
        for v0 in it:
            acc = table[acc][env[v0]]
        it = iter(rhs)
        acc2 = env[next(it)]
        for v0 in it:
            acc2 = table[acc2][env[v0]]
        if acc != acc2:
            return False
    return True


@lru_cache(maxsize=None)
def _axiom_models(pres: VarietyPresentation, max_order: int):
    """Models of the presentation up to max_order, in canonical order."""
    out = []
    for order in range(1, max_order + 1):
        for table in _semigroup_tables(order):
            if all(_table_satisfies(table, order, ax) for ax in pres.axioms):
                out.append((order, table))
    return tuple(out)


def refute(pres: VarietyPresentation, goal: Identity, max_order: int = DEFAULT_MAX_ORDER) -> Verdict:
    """Search models of the axioms up to max_order for a goal violation.

    Returns the first (least) violating model and assignment in canonical
    order.  Sound: a violation certifies the goal is not derivable.
    """
    if max_order > _ORDER_CAP:
        raise CapExceeded(f"max_order {max_order} exceeds cap {_ORDER_CAP}")
    goal_vars = goal.variables()
    models_checked = 0
    for order, table in _axiom_models(pres, max_order):
        models_checked += 1
        for values in itertools.product(range(order), repeat=len(goal_vars)):
            env = dict(zip(goal_vars, values))
            it = iter(goal.lhs)
            acc = env[next(it)]
            for v0 in it:
                acc = table[acc][env[v0]]
            it = iter(goal.rhs)
            acc2 = env[next(it)]
            for v0 in it:
                acc2 = table[acc2][env[v0]]
            if acc != acc2:
                model = FiniteSemigroup(order, table)
                assignment = tuple(zip(goal_vars, values))
                return Verdict(
                    "disproved",
                    CounterModel(model, assignment),
                    (("orders_scanned", order), ("models_checked", models_checked)),
                )
    return Verdict(
        "unknown",
        BudgetReport(f"no counter-model among axiom models up to order {max_order}"),
        (("orders_scanned", max_order), ("models_checked", models_checked)),
    )


# keyed by value (presentation, goal, budget, order); entries are small
_decide_cache: dict[tuple, Verdict] = {}


def decide(
    pres: VarietyPresentation,
    goal: Identity,
    budget: Budget = DEFAULT_BUDGET,
    max_order: int = DEFAULT_MAX_ORDER,
) -> Verdict:
    """Derivation first, counter-model search on unknown.  The two sides are
    individually sound, so their statuses can never conflict."""
    key = (pres, goal, budget, max_order)
    cached = _decide_cache.get(key)
    if cached is not None:
        return cached
    verdict = derive(pres, goal, budget)
    if verdict.status == "unknown":
        refutation = refute(pres, goal, max_order)
        if refutation.status == "disproved":
            verdict = Verdict(
                "disproved", refutation.witness, verdict.budget_used + refutation.budget_used
            )
        else:
            verdict = Verdict(
                "unknown", verdict.witness, verdict.budget_used + refutation.budget_used
            )
    _decide_cache[key] = verdict
    return verdict


# ---------------------------------------------------------------------------
# solidity checks
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SolidityViolation:
    hyp: Hypersubstitution
    identity: Identity
    bracketing_pair: tuple[Term, Term]
    image_identity: Identity
    verdict: Verdict

    def to_dict(self):
        return {
            "hypersubstitution": render_hypersubstitution(self.hyp),
            "identity": self.identity.render(),
            "bracketings": [render_term(t) for t in self.bracketing_pair],
            "image_identity": self.image_identity.render(),
            "verdict": self.verdict.to_dict(),
        }


@dataclass(frozen=True)
class SolidityReport:
    status: str  # "supported" | "violated" | "inconclusive"
    violation: SolidityViolation | None
    checked: int
    proved: int
    unknown_identities: tuple[Identity, ...]

    def to_dict(self):
        return {
            "status": self.status,
            "witness": self.violation.to_dict() if self.violation else None,
            "checked": self.checked,
            "proved": self.proved,
            "unknown_identities": [i.render() for i in self.unknown_identities],
        }


ASSOCIATIVITY = Identity((1, 2, 3), (1, 2, 3))


def check_rho_solidity(
    pres: VarietyPresentation,
    kind: RhoKind,
    hyps,
    identity_sample=(),
    budget: Budget = DEFAULT_BUDGET,
    max_order: int = DEFAULT_MAX_ORDER,
    bracketing_cap: int = 6,
) -> SolidityReport:
    """Apply the rho-image of every hypersubstitution to every bracketing
    pair of every sampled identity and decide whether the flattened image
    identity still holds.  The associative law is always part of the sample
    (its two bracketings carry the content for word-level identities)."""
    hyps = list(hyps)  # re-iterated per bracketing pair
    sample = [ASSOCIATIVITY]
    for ident in identity_sample:
        if ident not in sample:
            sample.append(ident)

    checked = proved = 0
    unknowns: list[Identity] = []
    for ident in sample:
        lhs_brackets = bracketings(ident.lhs, max_len=bracketing_cap)
        rhs_brackets = bracketings(ident.rhs, max_len=bracketing_cap)
        for bl in lhs_brackets:
            for br in rhs_brackets:
                for h in hyps:
                    u = term_to_word(apply_rho(kind, h, bl))
                    v = term_to_word(apply_rho(kind, h, br))
                    checked += 1
                    if u == v:
                        proved += 1
                        continue
                    image = Identity(u, v)
                    verdict = decide(pres, image, budget, max_order)
                    if verdict.status == "proved":
                        proved += 1
                    elif verdict.status == "disproved":
                        return SolidityReport(
                            "violated",
                            SolidityViolation(h, ident, (bl, br), image, verdict),
                            checked,
                            proved,
                            tuple(unknowns),
                        )
                    else:
                        if image not in unknowns:
                            unknowns.append(image)
    status = "supported" if not unknowns else "inconclusive"
    return SolidityReport(status, None, checked, proved, tuple(unknowns[:20]))


def classify_gamma_solid(
    pres: VarietyPresentation,
    n: int,
    budget: Budget = DEFAULT_BUDGET,
    max_order: int = DEFAULT_MAX_ORDER,
) -> Verdict:
    """gamma(n)-solidity for n >= 1 reduces to one identity: products of
    n+1 distinct variables on both sides, disjoint alphabets."""
    if n < 1:
        raise ValueError("n must be >= 1")
    goal = Identity(tuple(range(1, n + 2)), tuple(range(n + 2, 2 * n + 3)))
    return decide(pres, goal, budget, max_order)


@dataclass(frozen=True)
class TriggerScan:
    triggered: bool
    witness: Identity | None
    exhausted: bool
    scanned: int
    sample: tuple[Word, ...]

    def to_dict(self):
        return {
            "triggered": self.triggered,
            "witness": self.witness.render() if self.witness else None,
            "exhausted_within_bounds": self.exhausted,
            "scanned": self.scanned,
            "sample": [word_to_text(w) for w in self.sample],
        }


def _closure_scan(pres: VarietyPresentation, start: Word, budget: Budget, safe) -> TriggerScan:
    """Bounded reachability from ``start``; stops at the first word failing
    the ``safe`` predicate.  The fresh-letter alphabet adds one letter above
    the start's so renamed-variable partners can appear."""
    alphabet = tuple(sorted(set(start))) + (max(start) + 1,)
    rewriter = _Rewriter(pres, alphabet, budget)

    visited = {start}
    sample = [start]
    queue = deque([start])
    examined = 0
    while queue:
        u = queue.popleft()
        for new, _ax, _rev, _pos in rewriter.successors(u):
            examined += 1
            if examined >= budget.max_nodes:
                return TriggerScan(False, None, False, len(visited), tuple(sample))
            if new in visited:
                continue
            visited.add(new)
            if len(sample) < 20:
                sample.append(new)
            if not safe(new):
                return TriggerScan(True, Identity(start, new), False, len(visited), tuple(sample))
            queue.append(new)
    return TriggerScan(False, None, True, len(visited), tuple(sample))


@dataclass(frozen=True)
class CriteriaReport:
    status: str  # "supported" | "not_supported" | "inconclusive"
    base: Verdict
    trigger: TriggerScan
    extra: tuple[tuple[str, Verdict], ...]

    def to_dict(self):
        return {
            "status": self.status,
            "base": {"identity": "x1x2x3 = x3x1x2", "verdict": self.base.to_dict()},
            "trigger": self.trigger.to_dict(),
            "extra": {name: v.to_dict() for name, v in self.extra},
        }


def _criteria(
    pres: VarietyPresentation,
    start: Word,
    safe,
    extra_goal: Identity,
    budget: Budget,
    max_order: int,
) -> CriteriaReport:
    base = decide(pres, Identity((1, 2, 3), (3, 1, 2)), budget, max_order)
    if base.status == "disproved":
        scan = TriggerScan(False, None, False, 0, ())
        return CriteriaReport("not_supported", base, scan, ())

    scan = _closure_scan(pres, start, budget, safe)
    if scan.triggered or not scan.exhausted:
        extra = decide(pres, extra_goal, budget, max_order)
        pairs = ((extra_goal.render(), extra),)
        if scan.triggered and extra.status == "disproved":
            return CriteriaReport("not_supported", base, scan, pairs)
        if base.status == "proved" and extra.status == "proved":
            return CriteriaReport("supported", base, scan, pairs)
        return CriteriaReport("inconclusive", base, scan, pairs)

    # trigger settled negatively: only the base identity matters
    status = "supported" if base.status == "proved" else "inconclusive"
    return CriteriaReport(status, base, scan, ())


def check_bij2_sa_criteria(
    pres: VarietyPresentation,
    budget: Budget = DEFAULT_BUDGET,
    max_order: int = DEFAULT_MAX_ORDER,
) -> CriteriaReport:
    """Closure of a semigroup variety under the two sa-images of the
    bijective hypersubstitutions of the binary type: needs x1x2x3 = x3x1x2,
    plus x1x2x3 = x1x3x2 whenever some identity pairs a three-distinct-
    variable word of length three with a side of different shape."""
    return _criteria(
        pres,
        (1, 2, 3),
        lambda w: len(w) == 3 and set(w) == {1, 2, 3},
        Identity((1, 2, 3), (1, 3, 2)),
        budget,
        max_order,
    )


def check_bij2_fa_criteria(
    pres: VarietyPresentation,
    budget: Budget = DEFAULT_BUDGET,
    max_order: int = DEFAULT_MAX_ORDER,
) -> CriteriaReport:
    """fa-analogue: needs x1x2x3 = x3x1x2, plus commutativity whenever some
    identity pairs a two-distinct-variable word of length two with a side
    of different shape."""
    return _criteria(
        pres,
        (1, 2),
        lambda w: len(w) == 2 and set(w) == {1, 2},
        Identity((1, 2), (2, 1)),
        budget,
        max_order,
    )
