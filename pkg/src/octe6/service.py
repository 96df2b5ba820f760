"""FastAPI service exposing the algebra, the rank engine, and the suites.

Run with ``uvicorn octe6.service:app`` (or ``octe6 serve``).  The CLI is a
thin client of these endpoints; by default it mounts this app in-process.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from . import __version__, dirac, groups, jordan, lierank, serialize, verify
from .schemas import (
    ApplyRequest,
    ApplyResponse,
    DecomposeRequest,
    DecomposeResponse,
    DimsResponse,
    EigenPair,
    FamiliesResponse,
    HealthResponse,
    MatrixPayload,
    StateModel,
    StatesResponse,
    SubsetRank,
    TableResponse,
    VerifyRequest,
    VerifyResponse,
)

app = FastAPI(
    title="octe6",
    description="Octonions, the exceptional Jordan algebra, and the determinant-preserving group engine.",
    version=__version__,
)

_ERROR_CODES = {
    serialize.MalformedMatrixError: ("malformed_matrix", 400),
    serialize.NotHermitianError: ("not_hermitian", 400),
    groups.UnknownFamilyError: ("unknown_family", 404),
    jordan.EigenvalueConsistencyError: ("eigenvalue_consistency", 422),
    groups.TransformCompositionError: ("transform_composition", 422),
}


@app.exception_handler(serialize.MalformedMatrixError)
@app.exception_handler(serialize.NotHermitianError)
@app.exception_handler(groups.UnknownFamilyError)
@app.exception_handler(jordan.EigenvalueConsistencyError)
@app.exception_handler(groups.TransformCompositionError)
async def _domain_error(request: Request, exc: Exception) -> JSONResponse:
    code, status = _ERROR_CODES[type(exc)]
    detail = str(exc.args[0]) if exc.args else str(exc)
    return JSONResponse(status_code=status, content={"error": code, "detail": detail})


def _matrix_model(x) -> MatrixPayload:
    return MatrixPayload(**serialize.matrix_to_obj(x))


@app.get("/health", response_model=HealthResponse)
def health() -> HealthResponse:
    return HealthResponse(status="ok", version=__version__)


@app.get("/families", response_model=FamiliesResponse)
def families() -> FamiliesResponse:
    ids = [f.id for f in groups.catalog()]
    return FamiliesResponse(ids=ids, count=len(ids))


@app.get("/table", response_model=TableResponse)
def table() -> TableResponse:
    from .octonion import TABLE, UNIT_NAMES

    return TableResponse(units=list(UNIT_NAMES), rows=TABLE.unit_rows())


@app.post("/apply", response_model=ApplyResponse, response_model_exclude_none=True)
def apply(req: ApplyRequest) -> ApplyResponse:
    x = serialize.matrix_from_obj(req.matrix.wire_obj())
    family = groups.family_by_id(req.family)
    y = groups.apply_family(family, req.parameter, x)
    return ApplyResponse(
        matrix=_matrix_model(y),
        family=req.family,
        parameter=req.parameter,
        det_before=float(jordan.determinant(x)),
        det_after=float(jordan.determinant(y)),
    )


@app.post("/decompose", response_model=DecomposeResponse, response_model_exclude_none=True)
def decompose(req: DecomposeRequest) -> DecomposeResponse:
    x = serialize.matrix_from_obj(req.matrix.wire_obj())
    sd = jordan.spectral_decompose(x)
    residuals = {
        "reconstruction": float(jordan.frob(sd.reconstruct() - x)),
        "eigen_max": float(sd.eigen_residuals.max()),
        "completeness": float(jordan.frob(sd.idempotents.sum(axis=0) - jordan.IDENT3)),
    }
    pairs = [
        EigenPair(eigenvalue=float(lam), idempotent=_matrix_model(v))
        for lam, v in zip(sd.eigenvalues, sd.idempotents)
    ]
    return DecomposeResponse(
        eigenvalues=[float(v) for v in sd.eigenvalues],
        pairs=pairs,
        degenerate=sd.degenerate,
        residuals=residuals,
    )


@app.post("/verify", response_model=VerifyResponse)
def run_verify(req: VerifyRequest) -> VerifyResponse:
    try:
        report = verify.run_suites(req.seed, req.trials, req.tolerances, req.suites)
    except ValueError as exc:
        return JSONResponse(status_code=400, content={"error": "bad_request", "detail": str(exc)})
    return VerifyResponse(**report)


@app.get("/dims", response_model=DimsResponse)
def dims() -> DimsResponse:
    reports = lierank.full_rank_reports()
    expected = dict(lierank.SUBSET_EXPECTED, SO8_I=28, SO8_II=28, SO8_III=28, SO8_pair_I_II=28, SO8_triality=28, E6_naive=78)
    subsets = {
        name: SubsetRank(
            rank=rep.rank,
            expected=expected[name],
            gap=None if rep.gap == float("inf") else rep.gap,
            conclusive=rep.conclusive,
            passed=rep.passed,
        )
        for name, rep in reports.items()
    }
    return DimsResponse(subsets=subsets, passed=all(s.passed for s in subsets.values()))


@app.get("/states", response_model=StatesResponse)
def states() -> StatesResponse:
    out = []
    for s in dirac.lepton_spectrum():
        b = s.block()
        residual_norm, det_p = dirac.dirac_residual(b.P, b.psi)
        out.append(
            StateModel(
                label=s.label,
                generation=s.generation,
                helicity=s.helicity,
                theta=[serialize.octonion_to_list(c) for c in s.theta],
                xi=serialize.octonion_to_list(s.xi),
                momentum={
                    "d1": b.P.d1,
                    "d2": b.P.d2,
                    "a": serialize.octonion_to_list(b.P.a),
                    "components": dirac.momentum_components(b.P),
                },
                n=b.n,
                psi=[serialize.octonion_to_list(c) for c in b.psi],
                residual_norm=residual_norm,
                det_p=det_p,
                star_residual=dirac.star_residual(b),
            )
        )
    return StatesResponse(states=out, generations=list(dirac.GENERATIONS), count=len(out))
