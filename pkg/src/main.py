from fastapi import FastAPI, HTTPException, Depends
from pydantic import BaseModel, Field
from typing import List, Dict, Optional
from functools import lru_cache
from src.engine import InvariantEngine, EngineError
from src.errors import RookAlgebraError
import logging

logger = logging.getLogger(__name__)


# A braid word on n strands, e.g. "1 -2 1 -2"
class InvariantRequest(BaseModel):
    n: int = Field(..., ge=1, description="Strand count")
    word: str = Field("", description="Whitespace separated signed generators")
    kind: str = Field("jones", pattern="^(jones|alexander|linking)$")


class InvariantResponse(BaseModel):
    kind: str
    n: int
    word: List[int]
    writhe: int
    polynomial: Optional[str] = None
    linking: Optional[List[List[int]]] = None
    components: Optional[List[List[int]]] = None
    self_writhe: Optional[List[int]] = None


class ImageRequest(BaseModel):
    n: int = Field(..., ge=1)
    word: str = ""
    family: int = Field(5, ge=1, le=5)
    rescaled: bool = False


class ImageResponse(BaseModel):
    family: int
    rescaled: bool
    n: int
    word: List[int]
    terms: List[Dict[str, str]]


app = FastAPI(title="Rook Algebra Invariants API")


@lru_cache()
def get_engine() -> InvariantEngine:
    """
    Get or initialize the invariant engine using dependency injection
    """
    try:
        engine = InvariantEngine()
        logger.info("Invariant engine initialized successfully")
        return engine
    except Exception as e:
        logger.error(f"Failed to initialize invariant engine: {e}")
        raise HTTPException(status_code=503, detail="Engine initialization failed")


def _as_http_error(e: Exception) -> HTTPException:
    if isinstance(e, RookAlgebraError):
        logger.error(f"Computation error: {type(e).__name__}: {e}")
        return HTTPException(status_code=400, detail=f"{type(e).__name__}: {e}")
    if isinstance(e, (EngineError, ValueError)):
        logger.error(f"Validation error: {e}")
        return HTTPException(status_code=400, detail=str(e))
    logger.error(f"Unexpected error during computation: {e}")
    return HTTPException(status_code=500, detail="Internal server error")


# --- API Endpoints ---
@app.post("/invariant", response_model=InvariantResponse)
async def handle_invariant(
    request: InvariantRequest, engine: InvariantEngine = Depends(get_engine)
):
    """
    Computes the Jones or Alexander polynomial, or the linking data, of a closure
    """
    try:
        result = engine.compute_invariant(request.n, request.word, request.kind)
        return InvariantResponse(**result)
    except Exception as e:
        raise _as_http_error(e)


@app.post("/image", response_model=ImageResponse)
async def handle_image(
    request: ImageRequest, engine: InvariantEngine = Depends(get_engine)
):
    """
    Returns the image of a braid word in the planar rook algebra
    """
    try:
        result = engine.compute_image(
            request.n, request.word, request.family, request.rescaled
        )
        return ImageResponse(**result)
    except Exception as e:
        raise _as_http_error(e)


@app.get("/health")
def health_check(engine: InvariantEngine = Depends(get_engine)):
    """
    Returns a health check response
    """
    try:
        health_status = engine.health_check()
        return health_status
    except Exception as e:
        logger.error(f"Health check failed: {e}")
        return {"status": "unhealthy", "error": str(e)}


@app.get("/system-info")
def get_system_info(engine: InvariantEngine = Depends(get_engine)):
    """
    Returns system information and configuration
    """
    try:
        return engine.get_system_info()
    except Exception as e:
        logger.error(f"Failed to get system info: {e}")
        raise HTTPException(
            status_code=500, detail="Failed to retrieve system information"
        )
