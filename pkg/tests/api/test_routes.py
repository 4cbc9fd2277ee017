import math

import pytest
from fastapi.testclient import TestClient

from triglide.api.main import create_app
from triglide.domain.errors import InputValidationError

SQRT3 = math.sqrt(3.0)

HOME = {"x": 0.0, "y": 0.0, "z": 0.0, "q": [1.0, 0.0, 0.0, 0.0]}


@pytest.fixture
def client():
    return TestClient(create_app())


def test_health(client):
    response = client.get("/health")
    assert response.status_code == 200
    assert response.json()["status"] == "ok"


class TestKinematicsRoutes:
    def test_ik(self, client):
        response = client.post("/ik", json=HOME)
        assert response.status_code == 200
        body = response.json()
        assert body["rho2y"] == pytest.approx(-SQRT3 / 2)
        assert body["rho1x"] == pytest.approx(0.0)
        assert body["rho2x"] == pytest.approx(0.5)

    def test_ik_rejects_zero_quaternion(self, client):
        response = client.post("/ik", json={**HOME, "q": [0, 0, 0, 0]})
        assert response.status_code == 422

    def test_residual(self, client):
        joints = client.post("/ik", json=HOME).json()
        response = client.post("/residual", json={"pose": HOME, "joints": joints})
        assert response.status_code == 200
        assert response.json()["norm"] == pytest.approx(0.0, abs=1e-12)

    def test_dkp_from_mu(self, client):
        response = client.post("/dkp", json={"mu": [0.0, 0.0, 0.0]})
        assert response.status_code == 200
        body = response.json()
        assert body["root_count"] == 8
        assert len(body["solutions"]) == 4
        assert body["poses"] is None
        assert body["solutions"][0]["pose"]["x"] == pytest.approx(-SQRT3 / 2)

    def test_dkp_from_joints_lifts_poses(self, client):
        pose = {"x": 0.1, "y": -0.2, "z": 0.3, "q": [0.9, 0.1, 0.2, 0.3]}
        joints = client.post("/ik", json=pose).json()
        body = client.post("/dkp", json={"joints": joints}).json()
        assert len(body["poses"]) == len(body["solutions"])
        assert any(
            p["x"] == pytest.approx(0.1) and p["y"] == pytest.approx(-0.2)
            for p in body["poses"]
        )

    @pytest.mark.parametrize(
        "payload",
        [{}, {"mu": [0, 0, 0], "joints": {}}, {"mu": [0, 0]}, {"mu": [0, 0, 0], "x": 1}],
    )
    def test_dkp_rejects(self, client, payload):
        assert client.post("/dkp", json=payload).status_code == 422

    def test_aspect(self, client):
        body = client.post("/aspect", json={"q": [0, 1, 0, 0]}).json()
        assert body["label"] == "PP"
        assert body["f1"] == pytest.approx(0.5)

    def test_aspect_of_pose(self, client):
        body = client.post("/aspect", json={"pose": HOME}).json()
        assert body["label"] == "NN"
        assert abs(body["det"]) == pytest.approx(8 * SQRT3)


class TestCellRoutes:
    def test_list(self, client):
        body = client.get("/cells/joint").json()
        assert body["coordinates"] == ["mu2z", "mu3z", "mu3y"]
        assert len(body["cells"]) == 3

    def test_unknown_space(self, client):
        assert client.get("/cells/elsewhere").status_code == 422

    def test_classify(self, client):
        body = client.post("/cells/classify", json={"space": "nn", "point": [0.3, 0, 0]}).json()
        assert body["cell"] == 2
        assert body["boundary"] is False

    def test_classify_wrong_dimension(self, client):
        response = client.post("/cells/classify", json={"point": [0.0, 0.0]})
        assert response.status_code == 422


class TestOracleRoutes:
    def test_solve(self, client):
        body = client.post("/oracle", json={"mu": [0, 0, 0], "starts": 50, "seed": 2}).json()
        assert body["attempts"] == 50
        assert len(body["solutions"]) <= 4

    def test_compare_flags_boundary(self, client):
        response = client.post(
            "/oracle/compare", json={"mu": [0.25, 0.25, 1.0], "starts": 100}
        )
        assert response.status_code == 200
        assert response.json()["flags"] == ["degenerate: multiplicity"]

    def test_starts_bounded(self, client):
        response = client.post("/oracle", json={"mu": [0, 0, 0], "starts": 0})
        assert response.status_code == 422


def test_domain_errors_are_bad_requests():
    app = create_app()

    @app.get("/fail")
    async def fail():
        raise InputValidationError("point", "nope")

    response = TestClient(app).get("/fail")
    assert response.status_code == 400
    assert "point" in response.json()["detail"]
