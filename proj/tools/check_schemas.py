#!/usr/bin/env python3
"""Run the CLI once per command and validate every output file against schemas/."""
import csv
import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema

cli, schema_dir = sys.argv[1], pathlib.Path(sys.argv[2])
schemas = {p.name.split(".")[0]: json.loads(p.read_text()) for p in schema_dir.glob("*.schema.json")}
header = "run_index,strategy,n_swarms,detection_time_s,mission_time_s,fer,objective,complete"


def check(name, doc):
    jsonschema.Draft202012Validator(schemas[name]).validate(doc)


def check_csv(path):
    lines = path.read_text().splitlines()
    assert lines[0] == header, lines[0]
    for row in csv.DictReader(lines):
        int(row["run_index"])
        assert row["complete"] in ("0", "1")
        for k in ("detection_time_s", "mission_time_s", "fer", "objective"):
            float(row[k])


with tempfile.TemporaryDirectory() as tmp:
    out = pathlib.Path(tmp)
    cfg = json.loads(subprocess.run([cli, "config", "pine-table1-s3"], check=True, capture_output=True, text=True).stdout)
    check("config", cfg)
    cfg["engine"]["t_max"] = 3600.0
    cfg_path = out / "short.json"
    cfg_path.write_text(json.dumps(cfg))

    subprocess.run([cli, "run", str(cfg_path), "--trace", str(out / "t.jsonl"), "--out", str(out / "run")],
                   check=True, capture_output=True)
    n = 0
    for line in (out / "t.jsonl").read_text().splitlines():
        check("trace", json.loads(line))
        n += 1
    check("manifest", json.loads((out / "run/manifest.json").read_text()))
    check("config", json.loads((out / "run/manifest.json").read_text())["config"])
    check_csv(out / "run/summary.csv")

    subprocess.run([cli, "mc", str(cfg_path), "--runs", "3", "--out", str(out / "mc")], check=True, capture_output=True)
    check("aggregate", json.loads((out / "mc/aggregate.json").read_text()))
    check("manifest", json.loads((out / "mc/manifest.json").read_text()))
    check_csv(out / "mc/summary.csv")

    subprocess.run([cli, "compare", str(cfg_path), "--runs", "2", "--out", str(out / "cmp")], check=True,
                   capture_output=True)
    check("comparison", json.loads((out / "cmp/comparison.json").read_text()))
    check("manifest", json.loads((out / "cmp/manifest.json").read_text()))
    check_csv(out / "cmp/summary.csv")

print(f"schemas ok ({n} trace records)")
