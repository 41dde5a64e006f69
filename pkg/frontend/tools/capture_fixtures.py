"""Regenerate the console test fixtures from a hand-built dataset.

Runs the real analysis pipeline and captures actual HTTP bodies, so the
frontend tests consume the service's wire formats verbatim. Shapes are
chosen for the tests: a 9-node star-ext tree, a 4-node shared-guarantor
network whose three chains coincide on the financial plane (flower case),
a mutual 3-loop (multi-source case), and an isolated corporation (ring
badge case). Node counts 9 > 4 > 3 > 1 keep the tessellation order strict.

Usage: python3 tools/capture_fixtures.py
"""

import json
import tempfile
from pathlib import Path

from fastapi.testclient import TestClient

from iconviz.bundle import AnalysisConfig, analyze_files, load_bundle, write_bundle
from iconviz.server import create_app

HERE = Path(__file__).resolve().parent
FIXTURES = HERE.parent / "tests" / "fixtures"

NODES_CSV = """\
id,name,business_type,size_class,registered_capital,exposure
s,Hub Manufacturing,manufacturing,medium,5000,2000
v1,,manufacturing,small,1200,800
v2,,retail,small,900,0
v3,,services,micro,400,300
v4,,construction,small,700,450
v5,,logistics,medium,2500,900
v6,,retail,micro,300,0
v7,,agriculture,micro,250,60
v8,,services,small,600,240
g,Guarantor Co,services,large,9000,100
b1,,manufacturing,small,1000,500
b2,,retail,small,1100,500
b3,,construction,small,950,500
c1,,manufacturing,medium,3000,700
c2,,services,medium,2800,650
c3,,retail,medium,2600,600
d1,,agriculture,micro,150,50
"""

EDGES_CSV = """\
guarantor_id,borrower_id,amount
v1,s,400
v2,s,350
v3,v1,200
v4,v1,180
v5,v3,220
v6,v2,90
v7,v5,70
v8,v5,80
g,b1,250
g,b2,250
g,b3,250
c1,c2,300
c2,c3,280
c3,c1,260
"""


def main() -> None:
    FIXTURES.mkdir(parents=True, exist_ok=True)
    work = Path(tempfile.mkdtemp(prefix="iconviz_fixtures_"))
    (work / "nodes.csv").write_text(NODES_CSV, encoding="utf-8")
    (work / "edges.csv").write_text(EDGES_CSV, encoding="utf-8")

    bundle = analyze_files(work / "nodes.csv", work / "edges.csv", AnalysisConfig(seed=0))
    bundle_dir = write_bundle(bundle, work / "bundle")
    served = load_bundle(bundle_dir)
    client = TestClient(create_app(served))

    def capture(path: str, name: str) -> dict | list:
        response = client.get(path)
        assert response.status_code == 200, f"{path} -> {response.status_code}"
        (FIXTURES / name).write_text(
            json.dumps(response.json(), indent=2, sort_keys=True) + "\n", encoding="utf-8"
        )
        return response.json()

    networks = capture("/api/networks?sort=size", "networks_list.json")
    for record in networks:
        nid = record["network_id"]
        capture(f"/api/networks/{nid}", f"network_detail_{nid}.json")
        capture(f"/api/networks/{nid}/cem", f"network_cem_{nid}.json")
        capture(f"/api/networks/{nid}/chains", f"network_chains_{nid}.json")
        capture(f"/api/networks/{nid}/stats", f"network_stats_{nid}.json")
    (FIXTURES / "meta.json").write_text(
        json.dumps({"config_hash": served.config_hash}, indent=2) + "\n", encoding="utf-8"
    )
    print(f"captured fixtures for {len(networks)} networks into {FIXTURES}")


if __name__ == "__main__":
    main()
