"""HTTP facade over the core package.

Every endpoint accepts the same text formats the files use (signature
lines, ``<symbol> -> <term>`` images, ``<word> = <word>`` presentations)
and returns plain JSON.  The CLI is a thin client of this app; it can also
be served standalone with uvicorn.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

from .terms import (
    CapExceeded,
    ParseError,
    enumerate_terms,
    parse_signature,
    parse_term,
    render_term,
)
from .hypersubstitutions import (
    compose,
    enumerate_hypersubstitutions,
    parse_hypersubstitution,
    render_hypersubstitution,
)
from .bijections import bij_certificate, enumerate_bijective, invert
from .rho import RhoKind, apply_rho
from .varieties import (
    Budget,
    SEMIGROUP_SIGNATURE,
    check_bij2_fa_criteria,
    check_bij2_sa_criteria,
    check_rho_solidity,
    classify_gamma_solid,
    decide,
    enumerate_finite_semigroups,
    parse_identity,
    parse_presentation,
    term_to_word,
    word_to_text,
)

app = FastAPI(
    title="hypsolid",
    description="Term algebra, hypersubstitution monoids, and bounded "
    "solidity checking for semigroup varieties.",
    version="0.1.0",
)


def _bad_request(exc: Exception):
    raise HTTPException(status_code=422, detail=str(exc))


def _sig(text: str):
    try:
        return parse_signature(text)
    except ParseError as exc:
        _bad_request(exc)


def _hyp(text: str, sig):
    try:
        return parse_hypersubstitution(text, sig)
    except ParseError as exc:
        _bad_request(exc)


def _pres(text: str):
    try:
        return parse_presentation(text)
    except ParseError as exc:
        _bad_request(exc)


def _word_or_none(term) -> str | None:
    try:
        return word_to_text(term_to_word(term))
    except ValueError:
        return None


class BudgetParams(BaseModel):
    max_word_len: int = Field(default=8, ge=1)
    max_subst_len: int = Field(default=3, ge=1)
    max_nodes: int = Field(default=200_000, ge=1)

    def to_budget(self) -> Budget:
        return Budget(self.max_word_len, self.max_subst_len, self.max_nodes)


class ApplyRequest(BaseModel):
    signature: str
    hypersubstitution: str
    rho: str = "ext"
    term: str


class ApplyResponse(BaseModel):
    term: str
    word: str | None = None


@app.post("/apply", response_model=ApplyResponse)
def apply_endpoint(req: ApplyRequest) -> ApplyResponse:
    sig = _sig(req.signature)
    hyp = _hyp(req.hypersubstitution, sig)
    try:
        kind = RhoKind.parse(req.rho)
        term = parse_term(req.term, sig)
    except ParseError as exc:
        _bad_request(exc)
    image = apply_rho(kind, hyp, term)
    word = None
    if len(sig) == 1 and sig.symbols[0][1] == 2:
        word = _word_or_none(image)
    return ApplyResponse(term=render_term(image), word=word)


class ComposeRequest(BaseModel):
    signature: str
    first: str
    second: str


class HypResponse(BaseModel):
    hypersubstitution: str


@app.post("/compose", response_model=HypResponse)
def compose_endpoint(req: ComposeRequest) -> HypResponse:
    sig = _sig(req.signature)
    h1 = _hyp(req.first, sig)
    h2 = _hyp(req.second, sig)
    return HypResponse(hypersubstitution=render_hypersubstitution(compose(h1, h2)))


class CertificateRequest(BaseModel):
    signature: str
    hypersubstitution: str


class CertificateResponse(BaseModel):
    bijective: bool
    h: dict[str, str] | None = None
    p: dict[str, list[int]] | None = None


@app.post("/bij/certificate", response_model=CertificateResponse)
def certificate_endpoint(req: CertificateRequest) -> CertificateResponse:
    sig = _sig(req.signature)
    hyp = _hyp(req.hypersubstitution, sig)
    cert = bij_certificate(hyp)
    if cert is None:
        return CertificateResponse(bijective=False)
    return CertificateResponse(
        bijective=True,
        h=dict(cert.symbol_map),
        p={name: list(perm) for name, perm in cert.permutations},
    )


class SignatureRequest(BaseModel):
    signature: str
    cap: int = Field(default=1_000_000, ge=1)


class EnumerationResponse(BaseModel):
    count: int
    entries: list[str]


@app.post("/bij/enumerate", response_model=EnumerationResponse)
def bij_enumerate_endpoint(req: SignatureRequest) -> EnumerationResponse:
    sig = _sig(req.signature)
    try:
        hyps = enumerate_bijective(sig, cap=req.cap)
    except CapExceeded as exc:
        _bad_request(exc)
    return EnumerationResponse(
        count=len(hyps), entries=[render_hypersubstitution(h) for h in hyps]
    )


@app.post("/bij/invert", response_model=HypResponse)
def invert_endpoint(req: CertificateRequest) -> HypResponse:
    sig = _sig(req.signature)
    hyp = _hyp(req.hypersubstitution, sig)
    try:
        inverse = invert(hyp)
    except ValueError as exc:
        raise HTTPException(status_code=409, detail=str(exc))
    return HypResponse(hypersubstitution=render_hypersubstitution(inverse))


class EnumTermsRequest(BaseModel):
    signature: str
    max_depth: int = Field(ge=0)
    max_var: int = Field(ge=1)
    cap: int = Field(default=500_000, ge=1)


@app.post("/terms/enumerate", response_model=EnumerationResponse)
def enum_terms_endpoint(req: EnumTermsRequest) -> EnumerationResponse:
    sig = _sig(req.signature)
    try:
        terms = enumerate_terms(sig, req.max_depth, req.max_var, cap=req.cap)
    except CapExceeded as exc:
        _bad_request(exc)
    return EnumerationResponse(count=len(terms), entries=[render_term(t) for t in terms])


class EnumModelsRequest(BaseModel):
    max_order: int = Field(default=4, ge=1)


class ModelEntry(BaseModel):
    order: int
    table: list[list[int]]


class EnumModelsResponse(BaseModel):
    counts: dict[str, int]
    total: int
    models: list[ModelEntry]


@app.post("/models/enumerate", response_model=EnumModelsResponse)
def enum_models_endpoint(req: EnumModelsRequest) -> EnumModelsResponse:
    try:
        models = enumerate_finite_semigroups(req.max_order)
    except CapExceeded as exc:
        _bad_request(exc)
    counts: dict[str, int] = {}
    for m in models:
        counts[str(m.order)] = counts.get(str(m.order), 0) + 1
    return EnumModelsResponse(
        counts=counts,
        total=len(models),
        models=[ModelEntry(order=m.order, table=[list(r) for r in m.table]) for m in models],
    )


class DecideRequest(BaseModel):
    presentation: str
    identity: str
    budget: BudgetParams = BudgetParams()
    max_order: int = Field(default=4, ge=1, le=4)


class VerdictResponse(BaseModel):
    status: str
    witness: dict | None
    budget_used: dict[str, int]


@app.post("/variety/decide", response_model=VerdictResponse)
def decide_endpoint(req: DecideRequest) -> VerdictResponse:
    pres = _pres(req.presentation)
    try:
        goal = parse_identity(req.identity)
    except ParseError as exc:
        _bad_request(exc)
    verdict = decide(pres, goal, req.budget.to_budget(), req.max_order)
    return VerdictResponse(**verdict.to_dict())


class GammaSolidRequest(BaseModel):
    presentation: str
    level: int = Field(ge=1)
    budget: BudgetParams = BudgetParams()
    max_order: int = Field(default=4, ge=1, le=4)


@app.post("/variety/gamma-solid", response_model=VerdictResponse)
def gamma_solid_endpoint(req: GammaSolidRequest) -> VerdictResponse:
    pres = _pres(req.presentation)
    verdict = classify_gamma_solid(pres, req.level, req.budget.to_budget(), req.max_order)
    return VerdictResponse(**verdict.to_dict())


class CriteriaRequest(BaseModel):
    presentation: str
    budget: BudgetParams = BudgetParams()
    max_order: int = Field(default=4, ge=1, le=4)


class CriteriaResponse(BaseModel):
    status: str
    base: dict
    trigger: dict
    extra: dict


@app.post("/variety/sa-criteria", response_model=CriteriaResponse)
def sa_criteria_endpoint(req: CriteriaRequest) -> CriteriaResponse:
    report = check_bij2_sa_criteria(_pres(req.presentation), req.budget.to_budget(), req.max_order)
    return CriteriaResponse(**report.to_dict())


@app.post("/variety/fa-criteria", response_model=CriteriaResponse)
def fa_criteria_endpoint(req: CriteriaRequest) -> CriteriaResponse:
    report = check_bij2_fa_criteria(_pres(req.presentation), req.budget.to_budget(), req.max_order)
    return CriteriaResponse(**report.to_dict())


class RhoSolidRequest(BaseModel):
    presentation: str
    rho: str
    hypersubstitutions: list[str] = []
    image_depth: int | None = Field(default=None, ge=0)
    identities: list[str] = []
    budget: BudgetParams = BudgetParams()
    max_order: int = Field(default=4, ge=1, le=4)


class SolidityResponse(BaseModel):
    status: str
    witness: dict | None
    checked: int
    proved: int
    unknown_identities: list[str]


@app.post("/variety/rho-solid", response_model=SolidityResponse)
def rho_solid_endpoint(req: RhoSolidRequest) -> SolidityResponse:
    pres = _pres(req.presentation)
    try:
        kind = RhoKind.parse(req.rho)
        hyps = [parse_hypersubstitution(text, SEMIGROUP_SIGNATURE) for text in req.hypersubstitutions]
        sample = [parse_identity(text) for text in req.identities]
    except ParseError as exc:
        _bad_request(exc)
    if not hyps and req.image_depth is None:
        raise HTTPException(
            status_code=422,
            detail="no hypersubstitutions given; pass images or an image_depth",
        )
    sample.extend(pres.axioms)
    try:
        if req.image_depth is not None:
            hyps.extend(enumerate_hypersubstitutions(SEMIGROUP_SIGNATURE, req.image_depth))
        report = check_rho_solidity(
            pres, kind, hyps, sample, req.budget.to_budget(), req.max_order
        )
    except CapExceeded as exc:
        _bad_request(exc)
    return SolidityResponse(**report.to_dict())


@app.get("/health")
def health() -> dict:
    return {"status": "ok"}
