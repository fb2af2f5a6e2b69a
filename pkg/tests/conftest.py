import pytest
import sys
import random
import time
from pathlib import Path
from typing import Dict, Any
from unittest.mock import MagicMock
from fastapi.testclient import TestClient

# Add project root to Python path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))


# Configure pytest
def pytest_configure(config):
    """
    Configure pytest with custom markers and settings
    """
    # Add custom markers
    config.addinivalue_line(
        "markers", "slow: marks tests as slow (deselect with '-m \"not slow\"')"
    )
    config.addinivalue_line("markers", "integration: marks tests as integration tests")
    config.addinivalue_line("markers", "unit: marks tests as unit tests")


def pytest_collection_modifyitems(config, items):
    """
    Automatically mark tests based on their names and classes
    """
    for item in items:
        # Randomized property runs and whole-corpus checks are slow
        if "random" in item.name.lower() or "corpus" in item.name.lower():
            item.add_marker(pytest.mark.slow)

        # Mark integration tests
        if "integration" in item.name.lower() or "TestIntegration" in str(item.cls):
            item.add_marker(pytest.mark.integration)

        # Mark unit tests
        if "TestHealthEndpoint" in str(item.cls) or "TestInvariantEndpoint" in str(
            item.cls
        ):
            item.add_marker(pytest.mark.unit)


@pytest.fixture(scope="session")
def corpus_path() -> Path:
    return project_root / "data" / "corpus.jsonl"


@pytest.fixture(scope="function")
def rng() -> random.Random:
    """
    Fixed-seed generator for randomized properties
    """
    return random.Random(1234)


@pytest.fixture(scope="function")
def engine_config(corpus_path: Path):
    """
    Engine configuration pointing at the frozen corpus
    """
    from src.config import EngineConfig

    return EngineConfig(corpus_path=str(corpus_path), random_words=3)


@pytest.fixture(scope="session")
def test_config() -> Dict[str, Any]:
    """
    Centralized test configuration fixture
    """
    return {
        "invariant_response": {
            "kind": "jones",
            "n": 2,
            "word": [1, 1, 1],
            "writhe": 3,
            "polynomial": "q^2 + q^6 - q^8",
            "linking": None,
        },
        "image_response": {
            "family": 5,
            "rescaled": False,
            "n": 2,
            "word": [1],
            "terms": [
                {"diagram": "2;", "coefficient": "1 - U^2 - V^2 + U^2*V^2"},
                {"diagram": "2; 1->1, 2->2", "coefficient": "1"},
            ],
        },
        "health_response": {
            "status": "healthy",
            "components": {
                "jones": {"status": "healthy"},
                "alexander": {"status": "healthy"},
                "unknot": {"status": "healthy"},
                "corpus": {"status": "healthy", "path": "data/corpus.jsonl"},
            },
            "timestamp": time.time(),
        },
        "system_info_response": {
            "config": {
                "enumeration_cap": 6,
                "max_crossings": 24,
                "corpus_path": "data/corpus.jsonl",
            },
            "algebra_info": {
                "families": [1, 2, 3, 4, 5],
                "invariants": ["jones", "alexander", "linking"],
            },
        },
    }


@pytest.fixture(scope="function")
def mock_engine(test_config: Dict[str, Any]) -> MagicMock:
    """
    Creates a mock invariant engine with canned responses
    """
    mock_instance = MagicMock()

    mock_instance.compute_invariant.return_value = test_config["invariant_response"]
    mock_instance.compute_image.return_value = test_config["image_response"]
    mock_instance.health_check.return_value = test_config["health_response"]
    mock_instance.get_system_info.return_value = test_config["system_info_response"]

    return mock_instance


@pytest.fixture(scope="function")
def test_client(mock_engine: MagicMock) -> TestClient:
    """
    Create a test client with a mocked engine using dependency override
    """
    from src.main import app, get_engine

    # Override the dependency with our mock
    app.dependency_overrides[get_engine] = lambda: mock_engine

    with TestClient(app) as client:
        yield client

    # Clean up dependency override
    app.dependency_overrides.clear()


@pytest.fixture(scope="function")
def live_client(engine_config) -> TestClient:
    """
    Test client backed by a real engine
    """
    from src.engine import InvariantEngine
    from src.main import app, get_engine

    engine = InvariantEngine(engine_config)
    app.dependency_overrides[get_engine] = lambda: engine

    with TestClient(app) as client:
        yield client

    app.dependency_overrides.clear()


# Shared test utilities
def assert_invariant_structure(response_data: Dict[str, Any]):
    """
    Assert that an invariant response has the expected structure
    """
    for field in ("kind", "n", "word", "writhe"):
        assert field in response_data, f"Missing field: {field}"
    assert isinstance(response_data["word"], list)
    assert isinstance(response_data["writhe"], int)
    if response_data["kind"] == "linking":
        assert isinstance(response_data["linking"], list)
    else:
        assert isinstance(response_data["polynomial"], str)


def assert_health_structure(health: Dict[str, Any]):
    """
    Assert that a health payload has the expected structure
    """
    assert health["status"] in ("healthy", "unhealthy")
    assert isinstance(health["components"], dict)
    for name, component in health["components"].items():
        assert "status" in component, f"Missing status for {name}"
