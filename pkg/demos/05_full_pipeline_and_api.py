"""Run every batch stage through the CLI into a data directory, serve the
artifacts over HTTP, and query the API like the dashboard would.

Run:  python demos/05_full_pipeline_and_api.py
"""

import json
import socket
import tempfile
import threading
import time
import urllib.request
from pathlib import Path

import uvicorn

from tweetscope.api import create_app
from tweetscope.cli import main as cli
from tweetscope.synth import generate_fixture

tmp = tempfile.TemporaryDirectory()
root = Path(tmp.name)
tweets = root / "tweets.jsonl"
data = root / "data"

print("=== Batch pipeline (CLI stages) ===")
generate_fixture(tweets, seed=42, truth_path=root / "truth.json")
for argv in (
    ["ingest", str(tweets), "--out", str(data)],
    ["analyze", str(data)],
    ["topics", str(data), "--iters", "500"],
    ["controversy", str(data)],
):
    assert cli(argv) == 0, f"stage failed: {argv}"
print("artifacts:", sorted(p.name for p in data.iterdir()))

print("\n=== Serving and querying ===")
with socket.socket() as s:
    s.bind(("127.0.0.1", 0))
    port = s.getsockname()[1]

server = uvicorn.Server(uvicorn.Config(create_app(data), host="127.0.0.1",
                                       port=port, log_level="error"))
thread = threading.Thread(target=server.run, daemon=True)
thread.start()
while not server.started:
    time.sleep(0.05)


def get(path):
    with urllib.request.urlopen(f"http://127.0.0.1:{port}{path}") as resp:
        return json.loads(resp.read())


meta = get("/api/v1/meta")
print(f"corpus {meta['corpus_id'][:12]}… weeks {meta['weeks'][0]}"
      f"..{meta['weeks'][-1]} countries {meta['countries']}")

series = get(f"/api/v1/sentiment?granularity=week&from={meta['weeks'][0]}"
             f"&to={meta['weeks'][-1]}")["series"]
print("weekly sentiment means:",
      [f"{p['period'][-3:]}:{p['mean']:+.2f}" for p in series])

topics = get(f"/api/v1/topics?week={meta['weeks'][1]}&n_words=5")
print(f"{meta['weeks'][1]} topic 0:",
      [w for w, _ in topics["topics"][0]["words"]])

terms = get("/api/v1/controversy/terms")["terms"]
for t in terms:
    us = t["breakdown"]["countries"].get("US", {"fraction": 0})
    print(f"{t['term']!r}: {t['total_hits']} hits, "
          f"US share {us['fraction']:.0%}")

cooc = get("/api/v1/controversy/cooccurrence?term=kung%20flu&top_n=4")
print("co-occurring with 'kung flu':",
      [f"{e['token']}:{e['count']}" for e in cooc["top"]])

server.should_exit = True
thread.join(timeout=5)
print("\ndone.")
