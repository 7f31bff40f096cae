"""
FastAPI service exposing the theorem suite and the exact calculators.
"""
import time
from contextlib import asynccontextmanager

import structlog
from fastapi import FastAPI, HTTPException

from relsim import __version__
from relsim.config import settings
from relsim.core.errors import RelsimError
from relsim.core.logging import configure_logging
from relsim.models.request import ClassifySubgroupRequest, SpeedRequest, VerifyRequest
from relsim.models.response import ClassifySubgroupResponse, SpeedResponse, VerifyResponse
from relsim.modules.relations import RealSubgroupSpec, classify_subgroup, format_subgroup
from relsim.modules.scalar import format_scalar, parse_scalar
from relsim.modules.synchrony import negate, one_way_speed, parse_coords, parse_direction, two_way_speed
from relsim.services import REGISTRY, SuiteRunner

log = structlog.get_logger(__name__)

runner: SuiteRunner | None = None


@asynccontextmanager
async def lifespan(app: FastAPI):
    """Configure logging and the suite runner on startup."""
    global runner

    configure_logging(settings.LOG_LEVEL, settings.LOG_JSON)
    runner = SuiteRunner()
    log.info("Service ready", theorems=len(REGISTRY), parallel=runner.parallel)

    yield

    log.info("Service shutdown complete.")


app = FastAPI(
    title="relsim",
    description="Exact verification of group-invariant simultaneity relations",
    version=__version__,
    lifespan=lifespan,
)


@app.get("/health")
async def health_check():
    """Health check endpoint."""
    return {"status": "healthy", "ready": runner is not None}


@app.post("/verify", response_model=VerifyResponse)
async def verify(request: VerifyRequest):
    """Run the selected verifiers and return their reports."""
    if not runner:
        raise HTTPException(status_code=503, detail="Service not initialized")
    started = time.perf_counter()
    try:
        reports = await runner.run(request.suite, request.seed)
    except RelsimError as e:
        raise HTTPException(status_code=400, detail=str(e))
    except Exception as e:
        log.exception("Error running suite", suite=request.suite)
        raise HTTPException(status_code=500, detail=f"Verification failed: {str(e)}")
    return VerifyResponse(
        reports=reports,
        failed=[r.theorem_id for r in reports if r.failed],
        processing_time_seconds=round(time.perf_counter() - started, 3),
    )


@app.post("/classify-subgroup", response_model=ClassifySubgroupResponse)
async def classify(request: ClassifySubgroupRequest):
    try:
        spec = RealSubgroupSpec.generated(parse_scalar(g, source="gens") for g in request.gens)
    except RelsimError as e:
        raise HTTPException(status_code=400, detail=str(e))
    verdict = classify_subgroup(spec)
    return ClassifySubgroupResponse(
        subgroup=format_subgroup(spec),
        kind=verdict.kind.value,
        generator=format_scalar(verdict.generator) if verdict.generator is not None else None,
    )


@app.post("/synchrony/speed", response_model=SpeedResponse)
async def synchrony_speed(request: SpeedRequest):
    try:
        phi = parse_coords(request.coords, source="coords")
        n = parse_direction(request.direction, source="direction")
        return SpeedResponse(
            one_way=format_scalar(one_way_speed(phi, n)),
            two_way=format_scalar(two_way_speed(phi, n)),
            opposite_one_way=format_scalar(one_way_speed(phi, negate(n))),
        )
    except RelsimError as e:
        raise HTTPException(status_code=400, detail=str(e))


@app.get("/")
async def root():
    """Root endpoint with service info."""
    return {
        "service": "relsim",
        "version": __version__,
        "theorems": list(REGISTRY),
        "endpoints": {
            "health": "/health",
            "verify": "/verify",
            "classify_subgroup": "/classify-subgroup",
            "synchrony_speed": "/synchrony/speed",
        },
    }


if __name__ == "__main__":
    import uvicorn
    uvicorn.run(
        "main:app",
        host=settings.HOST,
        port=settings.PORT,
        workers=settings.WORKERS,
        log_level=settings.LOG_LEVEL.lower()
    )
