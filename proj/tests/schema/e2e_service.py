# Copyright 2026 The SmartEmbed Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""End-to-end check of `smartembed serve`: builds artifacts with the CLI,
starts the server on an ephemeral port and validates every response body
against the published JSON schemas."""

import argparse
import json
import pathlib
import re
import signal
import subprocess
import sys
import tempfile
import time
import urllib.error
import urllib.request

import jsonschema

FAILURES = []


def check(cond, what):
    print(("ok   " if cond else "FAIL ") + what)
    if not cond:
        FAILURES.append(what)


def load_schema(schemas, name):
    schema = json.loads((schemas / name).read_text())
    return jsonschema.Draft202012Validator(schema)


def valid(validator, doc, what):
    errors = sorted(validator.iter_errors(doc), key=str)
    check(not errors, what + ("" if not errors else ": " + errors[0].message))


def http(base, method, path, body=None, raw=None):
    data = raw if raw is not None else (json.dumps(body).encode() if body is not None else None)
    req = urllib.request.Request(base + path, data=data, method=method,
                                 headers={"Content-Type": "application/json"})
    try:
        with urllib.request.urlopen(req, timeout=30) as resp:
            return resp.status, resp.headers.get("Content-Type", ""), resp.read()
    except urllib.error.HTTPError as e:
        return e.code, e.headers.get("Content-Type", ""), e.read()


def run(cmd):
    res = subprocess.run(cmd, capture_output=True, text=True)
    if res.returncode != 0:
        sys.exit(f"command failed ({res.returncode}): {' '.join(cmd)}\n{res.stderr}")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--smartembed", required=True)
    ap.add_argument("--schemas", required=True, type=pathlib.Path)
    ap.add_argument("--seed", required=True, type=pathlib.Path)
    ap.add_argument("--fixtures", required=True, type=pathlib.Path)
    args = ap.parse_args()

    request_v = load_schema(args.schemas, "analyze_request.schema.json")
    response_v = load_schema(args.schemas, "analyze_response.schema.json")
    health_v = load_schema(args.schemas, "health.schema.json")
    error_v = load_schema(args.schemas, "error.schema.json")
    manifest_v = load_schema(args.schemas, "manifest.schema.json")

    bugdb = str(args.seed / "bugs" / "bugs.tsv")
    with tempfile.TemporaryDirectory(prefix="smartembed_e2e_") as tmp:
        work = pathlib.Path(tmp)
        exe = args.smartembed
        run([exe, "ingest", str(args.seed / "corpus"), "--out", str(work / "manifest.json")])
        valid(manifest_v, json.loads((work / "manifest.json").read_text()), "manifest matches schema")
        run([exe, "train", "--manifest", str(work / "manifest.json"), "--out", str(work / "model.bin"),
             "--bugdb", bugdb, "--dim", "100", "--epochs", "10", "--seed", "42"])
        run([exe, "index", "--manifest", str(work / "manifest.json"), "--model", str(work / "model.bin"),
             "--out", str(work / "corpus.mat"), "--bugdb", bugdb, "--bug-out", str(work / "bugs.mat")])

        server = subprocess.Popen(
            [exe, "serve", "--corpus", str(work / "corpus.mat"), "--bugmat", str(work / "bugs.mat"),
             "--bugdb", bugdb, "--model", str(work / "model.bin"), "--addr", "127.0.0.1:0",
             "--max-body", "65536", "--assets", str(work / "no-assets")],
            stdout=subprocess.PIPE, stderr=subprocess.PIPE, text=True)
        try:
            line = server.stdout.readline()
            m = re.search(r"http://([\d.]+):(\d+)", line)
            if not m:
                sys.exit("server did not report a port: " + line + server.stderr.read())
            base = f"http://{m.group(1)}:{m.group(2)}"

            status, ctype, body = http(base, "GET", "/api/v1/health")
            health = json.loads(body)
            check(status == 200 and ctype.startswith("application/json"), "health 200 JSON")
            valid(health_v, health, "health matches schema")
            check(health.get("corpusRows") == 12 and health.get("bugRows") == 11 and health.get("modelDim") == 100,
                  "health reports row counts and dimension")

            self_req = {"source": (args.seed / "corpus" / "escrow.sol").read_text()}
            valid(request_v, self_req, "self-clone request matches schema")
            status, _, body = http(base, "POST", "/api/v1/analyze", self_req)
            resp = json.loads(body)
            check(status == 200, "analyze self-clone 200")
            valid(response_v, resp, "self-clone response matches schema")
            check(resp["clones"] and resp["clones"][0]["similarity"] == 1.0 and
                  resp["clones"][0]["contractName"] == "Escrow", "clones[0] is the exact copy at 1.0")
            check([c["rank"] for c in resp["clones"]] == list(range(1, 6)), "five clones ranked 1..5")
            status2, _, body2 = http(base, "POST", "/api/v1/analyze", self_req)
            check(status2 == 200 and body2 == body, "identical requests give identical bodies")

            bug_req = {"source": (args.fixtures / "detection" / "overflow_fork.sol").read_text(), "topK": 2}
            valid(request_v, bug_req, "buggy request matches schema")
            status, _, body = http(base, "POST", "/api/v1/analyze", bug_req)
            resp = json.loads(body)
            valid(response_v, resp, "buggy response matches schema")
            line8 = [b for b in resp["bugs"] if b["startLine"] == 8]
            check(status == 200 and len(resp["clones"]) == 2, "topK honoured")
            check(len(line8) == 1 and line8[0]["bugType"] == "integer-overflow" and line8[0]["similarity"] >= 0.95,
                  "line-8 integer-overflow finding")
            nlines = bug_req["source"].count("\n") + 1
            check(all(1 <= b["startLine"] <= b["endLine"] <= nlines for b in resp["bugs"]),
                  "bug lines within the submitted source")

            cases = [
                ("parse failure", {"source": "not solidity at all"}, None, 422),
                ("empty contract", {"source": "// only a comment\n"}, None, 422),
                ("malformed JSON", None, b"{not json", 400),
                ("missing source", {"topK": 3}, None, 400),
                ("topK zero", {"source": "contract A {}", "topK": 0}, None, 400),
                ("threshold out of range", {"source": "contract A {}", "bugThreshold": 1.5}, None, 400),
                ("oversized body", None, json.dumps({"source": "x" * 70000}).encode(), 413),
            ]
            for name, doc, raw, want in cases:
                status, ctype, body = http(base, "POST", "/api/v1/analyze", doc, raw)
                check(status == want, f"{name} -> {want} (got {status})")
                try:
                    err = json.loads(body)
                except ValueError:
                    err = None
                valid(error_v, err, f"{name} error body matches schema")
                if name == "parse failure":
                    check(err.get("error") == "parse_error" and err.get("line") == 1, "parse diagnostic at line 1")

            status, _, body = http(base, "GET", "/api/v1/nope")
            check(status == 404, "unknown /api path 404")
            valid(error_v, json.loads(body), "404 body matches schema")
            status, _, body = http(base, "GET", "/api/v1/analyze")
            check(status == 405, "wrong method 405")
            valid(error_v, json.loads(body), "405 body matches schema")
            status, _, _ = http(base, "GET", "/")
            check(status == 404, "static route 404 without a bundle")
        finally:
            server.send_signal(signal.SIGTERM)
            try:
                code = server.wait(timeout=10)
            except subprocess.TimeoutExpired:
                server.kill()
                code = None
            check(code == 0, "server exits cleanly on SIGTERM")

    print(f"{len(FAILURES)} failure(s)")
    return 1 if FAILURES else 0


if __name__ == "__main__":
    sys.exit(main())
