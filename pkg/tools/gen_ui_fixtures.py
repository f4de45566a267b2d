#!/usr/bin/env python3
"""Capture real service responses as fixtures for the explorer's headless
tests, so the mocked transport in frontend/test stays honest."""

from __future__ import annotations

import json
import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from fastapi.testclient import TestClient

from semitotal.service import create_app

OUT = os.path.join(os.path.dirname(__file__), "..", "frontend", "test", "fixtures")


def save(name: str, payload) -> None:
    os.makedirs(OUT, exist_ok=True)
    with open(os.path.join(OUT, name), "w", encoding="utf-8") as fh:
        json.dump(payload, fh, indent=1, sort_keys=True)
        fh.write("\n")
    print("wrote", name)


client = TestClient(create_app())

r = client.get("/catalog")
save("catalog.json", r.json())

r = client.post("/sessions", json={"catalog": "q3", "pattern": "catalog"})
assert r.status_code == 201
sess = r.json()
sid = sess["session"]["id"]
# stable id for the mock transport
text = json.dumps(sess).replace(sid, "fix-q3")
save("create_q3.json", json.loads(text))

r = client.get(f"/sessions/{sid}/mcaps", params={"c0": 1, "c1": 3})
save("mcaps_q3_1_3.json", r.json())

pick = r.json()["mcaps"][0]
r = client.post(f"/sessions/{sid}/swap", json={"vertices": pick["vertices"], "colors": pick["colors"]})
assert r.status_code == 200
save("swap_q3.json", json.loads(json.dumps(r.json()).replace(sid, "fix-q3")))

r = client.get(f"/sessions/{sid}/mcaps", params={"c0": 1, "c1": 3})
save("mcaps_q3_1_3_after.json", r.json())
r = client.get(f"/sessions/{sid}")
save("state_q3_after_swap.json", json.loads(json.dumps(r.json()).replace(sid, "fix-q3")))

r = client.post(f"/sessions/{sid}/swap", json={"vertices": pick["vertices"], "colors": pick["colors"]})
assert r.status_code == 409
save("swap_q3_stale.json", r.json())

r = client.post(f"/sessions/{sid}/undo", json={})
save("undo_q3.json", json.loads(json.dumps(r.json()).replace(sid, "fix-q3")))

r = client.get(f"/sessions/{sid}/trace")
save("trace_q3.json", json.loads(json.dumps(r.json()).replace(sid, "fix-q3")))

r = client.post("/sessions", json={"catalog": "pappus"})
sid2 = r.json()["session"]["id"]
r = client.post(f"/sessions/{sid2}/auto", json={"goal": "equitable-tc", "budget": {"nodes": 20000}})
save("auto_pappus.json", json.loads(json.dumps(r.json()).replace(sid2, "fix-pappus")))

r = client.post("/sessions", json={"catalog": "tutte_coxeter"})
sid3 = r.json()["session"]["id"]
save("create_tutte_coxeter.json", json.loads(json.dumps(r.json()).replace(sid3, "fix-tuco")))

print("fixtures complete")
