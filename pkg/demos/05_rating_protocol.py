"""Walkthrough: the two-rater Likert protocol over the HTTP service.

Runs the rating service in-process, scripts two raters who disagree on
one item, lets the adjudicator settle it, and prints the success rates
and the paired McNemar comparison.
"""

from pathlib import Path

from fastapi.testclient import TestClient

from dsaterr import report
from dsaterr.core import Method
from dsaterr.rating import RatingStore, create_app
from dsaterr.synth import make_cohort

out = Path(__file__).parent / "out" / "rating"
out.mkdir(parents=True, exist_ok=True)

cases = make_cohort(out / "data", n_patients=3, seed=640)
manifest = report.CohortManifest(cases=tuple(cases), base_dir=out / "data")
# the raters score MODEL and ATLAS masks; here both are stand-ins
manifest = report.add_model_predictions(manifest)
for case in manifest.cases:
    for acq in case.acquisitions:
        acq.preds[Method.ATLAS] = acq.preds[Method.MODEL]
report.save_manifest(manifest, out / "manifest.json")

client = TestClient(create_app(RatingStore(out / "sessions")))
created = client.post("/sessions", json={
    "manifest_path": str(out / "manifest.json"),
    "raters": ["alice", "bob"],
    "adjudicator": "carol",
    "seed": 4,
    "session_id": "demo",
}).json()
print(f"session {created['session_id']}: {created['n_items']} blinded items")

# each rater sees the items in their own seeded order, method hidden
for rater in ("alice", "bob"):
    items = client.get("/sessions/demo/items", params={"rater": rater}).json()
    first = items["items"][0]
    print(f"{rater} starts at {first['item_id']} "
          f"({first['patient_id']} {first['view']}, method hidden)")

item_ids = sorted(i["item_id"] for i in items["items"])
# agreement on all but the first item
for item_id in item_ids[1:]:
    for rater in ("alice", "bob"):
        client.post("/ratings", json={
            "item_id": item_id, "rater_id": rater, "score": 3,
        })
client.post("/ratings", json={"item_id": item_ids[0], "rater_id": "alice", "score": 1})
client.post("/ratings", json={"item_id": item_ids[0], "rater_id": "bob", "score": 3})

pending = client.get("/sessions/demo/consensus").json()["pending"]
print(f"awaiting consensus: {[p['item_id'] for p in pending]}")
client.post("/consensus", json={
    "item_id": item_ids[0], "adjudicator_id": "carol", "score": 2,
})

results = client.get("/sessions/demo/results").json()["results"]
for method, cell in results["per_acquisition"].items():
    print(f"{method}: {cell['successes']}/{cell['total']} acquisitions succeed")
print(f"finalized by agreement: {results['consensus']['agreement']}, "
      f"by consensus: {results['consensus']['consensus']}")
print("mcnemar:", results["mcnemar"])
