from unittest.mock import patch

import pytest

from src.engine import EngineError, InvariantEngine
from src.errors import BadToken, CapExceeded, IndexOutOfRange


@pytest.fixture
def engine(engine_config) -> InvariantEngine:
    return InvariantEngine(engine_config)


class TestInvariantEngine:
    """Service facade over the invariant computations"""

    def test_jones(self, engine: InvariantEngine):
        result = engine.compute_invariant(3, "1 -2 1 -2", "jones")
        assert result["writhe"] == 0
        assert result["polynomial"] == "q^-4 - q^-2 + 1 - q^2 + q^4"
        assert result["linking"] is None

    def test_linking(self, engine: InvariantEngine):
        result = engine.compute_invariant(3, "1 -2 1 -2 1 -2", "linking")
        assert result["linking"] == [[0, 0, 0], [0, 0, 0], [0, 0, 0]]
        assert result["self_writhe"] == [0, 0, 0]

    def test_unknown_kind(self, engine: InvariantEngine):
        with pytest.raises(EngineError):
            engine.compute_invariant(2, "1", "homfly")

    def test_strand_count_limits(self, engine: InvariantEngine):
        with pytest.raises(EngineError):
            engine.compute_invariant(0, "", "jones")
        with pytest.raises(CapExceeded):
            engine.compute_invariant(7, "", "jones")

    def test_algebra_errors_pass_through(self, engine: InvariantEngine):
        with pytest.raises(BadToken):
            engine.compute_invariant(2, "one", "jones")

    def test_unexpected_errors_are_wrapped(self, engine: InvariantEngine):
        with patch("src.engine.jones", side_effect=RuntimeError("boom")):
            with pytest.raises(EngineError) as excinfo:
                engine.compute_invariant(2, "1", "jones")
        assert "boom" in str(excinfo.value)

    def test_image_terms(self, engine: InvariantEngine):
        result = engine.compute_image(2, "1", 5)
        coefficients = {t["diagram"]: t["coefficient"] for t in result["terms"]}
        assert coefficients["2; 1->1, 2->2"] == "1"
        assert coefficients["2; 1->2"] == "U^2"
        assert len(coefficients) == 6

    def test_representation(self, engine: InvariantEngine):
        result = engine.compute_representation(2, 1, "1", family=1)
        assert result["basis"] == [[1], [2]]
        assert result["rows"][1][0] == "U^2"

    def test_representation_wraps_unexpected_errors(self, engine: InvariantEngine):
        with patch("src.engine.rho_word", side_effect=RuntimeError("boom")):
            with pytest.raises(EngineError) as excinfo:
                engine.compute_representation(2, 1, "1")
        assert "boom" in str(excinfo.value)

    def test_representation_passes_algebra_errors(self, engine: InvariantEngine):
        with pytest.raises(IndexOutOfRange):
            engine.compute_representation(2, 3, "1")

    def test_system_info(self, engine: InvariantEngine):
        info = engine.get_system_info()
        assert info["config"]["random_words"] == 3
        assert len(info["algebra_info"]["diagram_counts"]) == 6
