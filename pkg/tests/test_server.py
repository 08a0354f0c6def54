import pytest
from fastapi.testclient import TestClient

from storytutor.estimator import TrainingDataset, save_model, train
from storytutor.recommender import EndpointConfig
from storytutor.server import ServerConfig, create_app

STORY = (
    "As a UI designer, I want to redesign the Resources page, "
    "so that it matches the new Broker design styles."
)


@pytest.fixture(scope="module")
def model_path(tmp_path_factory):
    texts = ("fix the login page", "refactor billing service", "export report data")
    model = train(TrainingDataset(texts=texts * 5, targets=(1.0, 8.0, 3.0) * 5))
    path = tmp_path_factory.mktemp("model") / "model.json"
    save_model(model, path)
    return str(path)


def make_client(model_path, endpoint=None, **kwargs):
    config = ServerConfig(model_path=model_path, endpoint=endpoint or EndpointConfig(), **kwargs)
    return TestClient(create_app(config))


def test_analyze_full_document(model_path, stub_chat):
    client = make_client(model_path, EndpointConfig(base_url=stub_chat.base_url))
    response = client.post("/analyze", json={"text": STORY})
    assert response.status_code == 200
    body = response.json()
    assert set(body) == {"readability", "story_points", "recommendation", "timings_ms"}
    assert body["recommendation"]["source"] == "remote-llm"
    assert 0.0 <= body["story_points"] <= 100.0
    scores = body["readability"]
    mean = (
        scores["gunning_fog"]
        + scores["flesch_reading_ease"]
        + scores["coleman_liau"]
        + scores["automated_readability"]
    ) / 4.0
    assert abs(scores["final_result"] - mean) < 1e-9


def test_analyze_empty_text_is_400(model_path):
    client = make_client(model_path)
    assert client.post("/analyze", json={"text": ""}).status_code == 400
    assert client.post("/analyze", json={"text": "   "}).status_code == 400
    assert client.post("/analyze", json={}).status_code == 400


def test_analyze_oversized_body_is_413(model_path):
    client = make_client(model_path, body_limit_bytes=100)
    response = client.post("/analyze", json={"text": "x" * 1000})
    assert response.status_code == 413


def test_analyze_llm_down_degrades_to_offline(model_path, stub_chat):
    stub_chat.mode = "error"
    client = make_client(
        model_path, EndpointConfig(base_url=stub_chat.base_url, timeout_seconds=0.5)
    )
    response = client.post("/analyze", json={"text": STORY})
    assert response.status_code == 200
    assert response.json()["recommendation"]["source"] == "offline-heuristic"


def test_analyze_is_stateless(model_path):
    client = make_client(model_path)
    a = client.post("/analyze", json={"text": STORY}).json()
    b = client.post("/analyze", json={"text": STORY}).json()
    assert a["readability"] == b["readability"]
    assert a["story_points"] == b["story_points"]


def test_health_ok_after_startup(model_path):
    client = make_client(model_path)
    response = client.get("/health")
    assert response.status_code == 200
    body = response.json()
    assert body["status"] == "ok"
    assert body["model_version"] == 1


def test_health_503_before_model_load(model_path):
    from storytutor.server import create_app as factory

    app = factory(ServerConfig(model_path=model_path))
    app.state.model = None
    client = TestClient(app)
    assert client.get("/health").status_code == 503
