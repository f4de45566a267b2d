import json

import pytest
from fastapi.testclient import TestClient

from semitotal.catalog_io import catalog
from semitotal.serialize import dumps, payload_listing, payload_mcaps
from semitotal.service import create_app


@pytest.fixture()
def client():
    return TestClient(create_app())


def make_session(client, body):
    r = client.post("/sessions", json=body)
    assert r.status_code == 201, r.text
    return r.json()["session"]


def test_catalog_endpoint(client):
    r = client.get("/catalog")
    assert r.status_code == 200
    body = r.json()
    assert "q3" in body["keys"]
    assert body["entries"]["q3"]["has_pattern"] is True


def test_q3_session_swap_flow(client):
    s = make_session(client, {"catalog": "q3", "pattern": "catalog"})
    assert s["listing"]["beta"] == 2
    sid = s["id"]

    r = client.get(f"/sessions/{sid}/mcaps", params={"c0": 1, "c1": 3})
    mcaps = r.json()["mcaps"]
    assert mcaps
    pick = mcaps[0]
    r = client.post(f"/sessions/{sid}/swap", json={"vertices": pick["vertices"], "colors": pick["colors"]})
    assert r.status_code == 200
    body = r.json()
    assert body["session"]["listing"]["totals"] == [5, 5, 5, 5]
    assert body["session"]["listing"]["is_tc"] is True
    assert body["last_step"]["class"].startswith("total")

    # stale path now 409s with detail
    r = client.post(f"/sessions/{sid}/swap", json={"vertices": pick["vertices"], "colors": pick["colors"]})
    assert r.status_code == 409
    assert "detail" in r.json()

    r = client.post(f"/sessions/{sid}/undo", json={})
    assert r.json()["session"]["listing"]["beta"] == 2
    r = client.post(f"/sessions/{sid}/redo", json={})
    assert r.json()["session"]["listing"]["totals"] == [5, 5, 5, 5]
    assert client.post(f"/sessions/{sid}/redo", json={}).status_code == 409


def test_element_ref_paths_accepted(client):
    s = make_session(client, {"catalog": "q3"})
    sid = s["id"]
    r = client.get(f"/sessions/{sid}/mcaps", params={"c0": 1, "c1": 3})
    pick = r.json()["mcaps"][0]
    r = client.post(f"/sessions/{sid}/swap", json={"path": pick["path"], "colors": pick["colors"]})
    assert r.status_code == 200


def test_flip_and_trace_replayability(client):
    s = make_session(client, {"catalog": "mcgee", "pattern": "catalog"})
    sid = s["id"]
    r = client.get(f"/sessions/{sid}/mcaps")
    flips = r.json()["flips"]
    assert len(flips) == 4
    r = client.post(f"/sessions/{sid}/flip", json={"edge": flips[0]["edge"]})
    assert r.status_code == 200
    assert r.json()["last_step"]["kind"] == "flip"
    tr = client.get(f"/sessions/{sid}/trace").json()
    assert len(tr["steps"]) == 1
    # replaying the trace steps client-side reproduces the final coloring
    assert tr["final"]["vertex_colors"] == r.json()["session"]["coloring"]["vertex_colors"]


def test_auto_endpoint(client):
    s = make_session(client, {"catalog": "heawood"})
    sid = s["id"]
    r = client.post(f"/sessions/{sid}/auto", json={"goal": "equitable-tc", "budget": {"nodes": 5000}})
    body = r.json()
    assert body["goal_reached"] is True
    assert body["session"]["listing"]["totals"] == [9, 9, 9, 8]
    # session remains navigable
    r = client.post(f"/sessions/{sid}/undo", json={})
    assert r.status_code == 200


def test_session_from_uploaded_graph_and_coloring(client):
    entry = catalog("q3")
    mu = entry.lacunar_stc()
    body = {"graph": entry.graph.to_json(), "coloring": mu.to_json("q3")}
    s = make_session(client, body)
    assert s["listing"]["beta"] == 2


def test_error_codes(client):
    assert client.get("/sessions/missing").status_code == 404
    assert client.post("/sessions", json={"catalog": "missing"}).status_code == 404
    assert client.post("/sessions", content=b"notjson").status_code == 400
    bad = {
        "graph": {"n": 3, "edges": [[0, 1], [1, 2], [0, 2]]},
        "coloring": {"vertex_colors": [0, 0, 0], "edge_colors": [1, 1, 1]},
    }
    assert client.post("/sessions", json=bad).status_code == 422
    s = make_session(client, {"catalog": "q3"})
    sid = s["id"]
    assert client.post(f"/sessions/{sid}/undo", json={}).status_code == 409
    assert client.post(f"/sessions/{sid}/swap", json={"colors": [1]}).status_code == 400
    assert client.post(f"/sessions/{sid}/flip", json={"edge": "x"}).status_code == 400
    assert client.get(f"/sessions/{sid}/export", params={"format": "pdf"}).status_code == 400
    assert client.get(f"/sessions/{sid}/mcaps", params={"c0": 1, "c1": 1}).status_code == 400


def test_export_formats(client):
    s = make_session(client, {"catalog": "q3"})
    sid = s["id"]
    dot = client.get(f"/sessions/{sid}/export", params={"format": "dot"}).text
    assert dot.startswith('graph "q3"') and "tcolor=" in dot
    obj = client.get(f"/sessions/{sid}/export", params={"format": "json"}).json()
    assert obj["graph"]["n"] == 8 and len(obj["coloring"]["edge_colors"]) == 12


def test_http_and_cli_payloads_are_byte_identical(client, tmp_path, capsys):
    """The listing and mcaps payloads must serialize to the same bytes
    through both surfaces."""
    from semitotal.cli import run_cli

    s = make_session(client, {"catalog": "q3"})
    sid = s["id"]

    http_listing = client.get(f"/sessions/{sid}/listing").content.decode()
    assert run_cli(["listing", "--catalog", "q3", "--pattern-from-catalog", "--json"]) == 0
    cli_listing = capsys.readouterr().out.strip()
    assert cli_listing == http_listing

    http_mcaps = client.get(f"/sessions/{sid}/mcaps", params={"c0": 1, "c1": 3}).content.decode()
    assert run_cli(["mcaps", "--catalog", "q3", "--pattern-from-catalog", "--c0", "1", "--c1", "3", "--json"]) == 0
    cli_mcaps = capsys.readouterr().out.strip()
    assert cli_mcaps == http_mcaps


def test_session_state_is_replay_of_trace(client):
    s = make_session(client, {"catalog": "tutte_coxeter"})
    sid = s["id"]
    client.post(f"/sessions/{sid}/auto", json={"goal": "equitable-stc", "budget": {"nodes": 20000}})
    tr = client.get(f"/sessions/{sid}/trace").json()
    state = client.get(f"/sessions/{sid}").json()["session"]
    assert tr["final"]["vertex_colors"] == state["coloring"]["vertex_colors"]
    assert tr["final"]["edge_colors"] == state["coloring"]["edge_colors"]


def test_optional_file_backed_persistence(tmp_path):
    client = TestClient(create_app(persist_dir=str(tmp_path)))
    s = make_session(client, {"catalog": "q3"})
    sid = s["id"]
    r = client.get(f"/sessions/{sid}/mcaps", params={"c0": 1, "c1": 3})
    pick = r.json()["mcaps"][0]
    client.post(f"/sessions/{sid}/swap", json={"vertices": pick["vertices"], "colors": pick["colors"]})
    saved = json.loads((tmp_path / f"{sid}.json").read_text())
    assert saved["cursor"] == 1 and len(saved["steps"]) == 1
    assert saved["final"]["vertex_colors"] != saved["initial"]["vertex_colors"]


def test_mcaps_query_param_errors_are_400(client):
    s = make_session(client, {"catalog": "q3"})
    sid = s["id"]
    assert client.get(f"/sessions/{sid}/mcaps", params={"c0": "x", "c1": 3}).status_code == 400
    assert client.get(f"/sessions/{sid}/mcaps", params={"c0": 1}).status_code == 400
