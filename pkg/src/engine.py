import logging
import time
from contextlib import contextmanager
from math import comb
from pathlib import Path
from typing import Any, Dict, List, Optional

from src.braid import BraidWord, parse_word, writhe
from src.config import EngineConfig, load_config
from src.errors import CapExceeded, RookAlgebraError
from src.homs import FamilySpec, phi_word
from src.invariants import alexander, jones, linking_profile
from src.poly import QPoly
from src.reps import rho_word

# Configure logging
logging.basicConfig(
    level=logging.INFO, format="%(asctime)s - %(name)s - %(levelname)s - %(message)s"
)
logger = logging.getLogger(__name__)

KINDS = ("jones", "alexander", "linking")


class EngineError(Exception):
    """
    Custom exception for invariant engine errors
    """

    pass


class InvariantEngine:
    """
    Invariant engine facade with input validation and timing
    """

    def __init__(self, config: Optional[EngineConfig] = None):
        """
        Initialize the engine with configuration
        """
        self.config = config or load_config()
        logging.getLogger().setLevel(self.config.log_level)
        self._init_time = time.time()
        logger.info(
            f"Invariant engine ready (seed {self.config.default_seed}, "
            f"enumeration cap {self.config.enumeration_cap})"
        )

    @contextmanager
    def _query_context(self, label: str):
        """
        Context manager for query execution with timing and error handling
        """
        start_time = time.time()
        try:
            yield
        except Exception as e:
            elapsed = time.time() - start_time
            logger.error(f"{label} failed after {elapsed:.2f} seconds: {e}")
            raise
        else:
            elapsed = time.time() - start_time
            logger.info(f"{label} completed in {elapsed:.2f} seconds")

    def _validate_word(self, n: int, word: str) -> BraidWord:
        """
        Validate strand count and parse the braid word
        """
        if n < 1:
            raise EngineError("Strand count must be at least 1")
        if n > self.config.enumeration_cap:
            raise CapExceeded(
                f"Strand count {n} exceeds the enumeration cap "
                f"{self.config.enumeration_cap}"
            )
        return parse_word(word, n)

    def compute_invariant(self, n: int, word: str, kind: str) -> Dict[str, Any]:
        """
        Jones, Alexander or linking data of the closure of a braid word
        """
        if kind not in KINDS:
            raise EngineError(f"Unknown invariant kind '{kind}', expected {KINDS}")
        try:
            with self._query_context(f"{kind} invariant"):
                w = self._validate_word(n, word)
                result: Dict[str, Any] = {
                    "kind": kind,
                    "n": w.n,
                    "word": list(w.letters),
                    "writhe": writhe(w),
                }
                if kind == "linking":
                    data = linking_profile(w)
                    result["polynomial"] = None
                    result["linking"] = data.linking
                    result["components"] = [list(c) for c in data.components]
                    result["self_writhe"] = data.self_writhe
                else:
                    value: QPoly = jones(w) if kind == "jones" else alexander(w)
                    result["polynomial"] = str(value)
                    result["linking"] = None
                return result
        except (RookAlgebraError, EngineError):
            raise
        except Exception as e:
            logger.error(f"Unexpected error during invariant computation: {e}")
            raise EngineError(f"Unexpected error: {e}")

    def compute_image(
        self, n: int, word: str, family: int, rescaled: bool = False
    ) -> Dict[str, Any]:
        """
        Image of a braid word under one of the homomorphism families
        """
        try:
            with self._query_context(f"phi_{family} image"):
                w = self._validate_word(n, word)
                element = phi_word(FamilySpec(family, rescaled), w)
                terms = [
                    {"diagram": str(d), "coefficient": str(element.coefficient(d))}
                    for d in element.support()
                ]
                return {
                    "family": family,
                    "rescaled": rescaled,
                    "n": w.n,
                    "word": list(w.letters),
                    "terms": terms,
                }
        except (RookAlgebraError, EngineError):
            raise
        except Exception as e:
            logger.error(f"Unexpected error during image computation: {e}")
            raise EngineError(f"Unexpected error: {e}")

    def compute_representation(
        self, n: int, k: int, word: str, family: int = 1
    ) -> Dict[str, Any]:
        """
        rho_k matrix of the image of a braid word
        """
        try:
            with self._query_context(f"rho_{k} matrix"):
                w = self._validate_word(n, word)
                matrix = rho_word(k, FamilySpec(family), w)
                return {
                    "n": w.n,
                    "k": k,
                    "family": family,
                    "basis": [list(s) for s in matrix.basis],
                    "rows": matrix.to_rows(),
                }
        except (RookAlgebraError, EngineError):
            raise
        except Exception as e:
            logger.error(f"Unexpected error during representation computation: {e}")
            raise EngineError(f"Unexpected error: {e}")

    def health_check(self) -> Dict[str, Any]:
        """
        Perform health check on engine components
        """
        health_status: Dict[str, Any] = {
            "status": "healthy",
            "components": {},
            "timestamp": time.time(),
        }

        checks = {
            "jones": lambda: str(jones(BraidWord(2, (1, 1, 1)))) == "q^2 + q^6 - q^8",
            "alexander": lambda: str(alexander(BraidWord(2, (1, 1, 1))))
            == "q^-2 - 1 + q^2",
            "unknot": lambda: str(jones(BraidWord(1))) == "1",
        }
        for name, check in checks.items():
            try:
                if check():
                    health_status["components"][name] = {"status": "healthy"}
                else:
                    health_status["components"][name] = {
                        "status": "unhealthy",
                        "error": "Unexpected value",
                    }
                    health_status["status"] = "unhealthy"
            except Exception as e:
                health_status["components"][name] = {
                    "status": "unhealthy",
                    "error": str(e),
                }
                health_status["status"] = "unhealthy"
                logger.error(f"Health check {name} failed: {e}")

        corpus = Path(self.config.corpus_path)
        health_status["components"]["corpus"] = {
            "status": "healthy" if corpus.exists() else "missing",
            "path": str(corpus),
        }
        return health_status

    def get_system_info(self) -> Dict[str, Any]:
        """
        Get system information and configuration
        """
        sizes: List[Dict[str, int]] = [
            {"n": n, "diagrams": comb(2 * n, n)}
            for n in range(1, self.config.enumeration_cap + 1)
        ]
        return {
            "config": self.config.to_dict(),
            "algebra_info": {
                "families": [1, 2, 3, 4, 5],
                "invariants": list(KINDS),
                "diagram_counts": sizes,
            },
            "initialization_time": self._init_time,
        }
