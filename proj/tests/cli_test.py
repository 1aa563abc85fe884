#!/usr/bin/env python3
"""End-to-end checks of the delzant CLI: exit codes, byte-identical reruns,
and schema conformance of every subcommand's output."""

import json
import os
import subprocess
import sys
import tempfile

CLI = sys.argv[1]
SCHEMA_DIR = sys.argv[2]

try:
    import jsonschema

    def make_validator(schema_name):
        store = {}
        for fname in os.listdir(SCHEMA_DIR):
            if fname.endswith(".schema.json"):
                with open(os.path.join(SCHEMA_DIR, fname)) as f:
                    schema = json.load(f)
                store[schema["$id"]] = schema
        schema = store[schema_name]
        resolver = jsonschema.RefResolver(base_uri=schema_name, referrer=schema, store=store)
        return jsonschema.Draft7Validator(schema, resolver=resolver)

    HAVE_JSONSCHEMA = True
except ImportError:  # structural checks only
    HAVE_JSONSCHEMA = False

failures = []


def check(name, condition):
    print(("ok   " if condition else "FAIL ") + name)
    if not condition:
        failures.append(name)


def run(*args, stdin=None):
    proc = subprocess.run([CLI, *args], capture_output=True, text=True, input=stdin)
    return proc.returncode, proc.stdout, proc.stderr


def validate(name, payload, schema_name):
    if not HAVE_JSONSCHEMA:
        return
    validator = make_validator(schema_name)
    errors = list(validator.iter_errors(payload))
    check(f"{name} validates against {schema_name}", not errors)


def main():
    tmp = tempfile.mkdtemp()

    # construct + verify round trip
    code, out, _ = run("construct", "delzant_triangle", "--param", "lambda=2")
    check("construct exits 0", code == 0)
    triangle = json.loads(out)["polytope"]
    validate("constructed triangle", triangle, "polytope.schema.json")
    tri_path = os.path.join(tmp, "tri.json")
    with open(tri_path, "w") as f:
        json.dump(triangle, f)

    code, out, _ = run("verify", tri_path)
    check("verify exits 0", code == 0)
    check("triangle is delzant", json.loads(out)["delzant"] is True)

    # byte-identical output on identical input
    _, out2, _ = run("verify", tri_path)
    check("verify output is byte-identical on rerun", out == out2)
    _, c1, _ = run("construct", "isolated_fan", "--param", "k=2")
    _, c2, _ = run("construct", "isolated_fan", "--param", "k=2")
    check("construct output is byte-identical on rerun", c1 == c2)

    # chop, then classify
    code, out, _ = run("chop", tri_path, "--vertex", "[0,0]", "--epsilon", "1/4")
    check("chop exits 0", code == 0)
    chopped = json.loads(out)
    validate("chopped polygon", chopped, "polytope.schema.json")
    chop_path = os.path.join(tmp, "chopped.json")
    with open(chop_path, "w") as f:
        json.dump(chopped, f)
    code, out, _ = run("classify", chop_path)
    check("classify exits 0", code == 0)
    validate("classification", json.loads(out), "classification.schema.json")

    # a non-Delzant pentagon is rejected with exit 1
    reflected = {"dim": 2, "vertices": [["0", "0"], ["-1", "0"], ["0", "1"]]}
    refl_path = os.path.join(tmp, "refl.json")
    with open(refl_path, "w") as f:
        json.dump(reflected, f)
    code, out, _ = run("sum", tri_path, refl_path)
    check("sum exits 0", code == 0)
    pent_path = os.path.join(tmp, "pentagon.json")
    with open(pent_path, "w") as f:
        f.write(out)
    code, out, _ = run("classify", pent_path)
    check("classify of non-Delzant exits 1", code == 1)
    err = json.loads(out)
    validate("classify error object", err, "error.schema.json")
    check("error names the Delzant failure", "Delzant" in err["error"]["message"])

    # fans: construct moae, realize (not polytopal), desingularize base
    code, out, _ = run("construct", "moae_fan", "--param", "unimodular=1")
    moae = json.loads(out)["fan"]
    validate("moae fan", moae, "fan.schema.json")
    moae_path = os.path.join(tmp, "moae.json")
    with open(moae_path, "w") as f:
        json.dump(moae, f)
    code, out, _ = run("realize", moae_path)
    check("realize exits 0", code == 0)
    realized = json.loads(out)
    check("moae fan is not polytopal", realized["polytopal"] is False)
    check("certificate present", len(realized["certificate"]) > 0)

    code, out, _ = run("construct", "moae_fan", "--param", "unimodular=0")
    base_path = os.path.join(tmp, "moae_base.json")
    with open(base_path, "w") as f:
        json.dump(json.loads(out)["fan"], f)
    code, out, _ = run("desingularize", base_path)
    check("desingularize exits 0", code == 0)
    desing = json.loads(out)
    validate("desingularized fan", desing["fan"], "fan.schema.json")
    validate("trace", desing["trace"], "trace.schema.json")
    check("one insertion", len(desing["trace"]) == 1)

    # refinecheck via pipe from construct (stdin input)
    uni_text = json.dumps(moae)
    code, out, _ = run("refinecheck", "-", base_path, stdin=uni_text)
    check("refinecheck exits 0", code == 0)
    check("unimodular variant refines base", json.loads(out)["refines"] is True)

    # secondary cone of the Hirzebruch fan
    code, out, _ = run("construct", "hirzebruch_fan", "--param", "k=2")
    hfan_path = os.path.join(tmp, "hfan.json")
    with open(hfan_path, "w") as f:
        json.dump(json.loads(out)["fan"], f)
    code, out, _ = run("secondary", hfan_path)
    check("secondary exits 0", code == 0)
    validate("secondary cone", json.loads(out), "secondary_cone.schema.json")

    # distance
    code, out, _ = run("distance", tri_path, chop_path, "--metric", "hausdorff",
                       "--samples", "1000")
    check("distance exits 0", code == 0)
    dist = json.loads(out)
    validate("distance result", dist, "distance.schema.json")
    check("estimate below exact value", dist["support_norm_estimate"] <= dist["value"] + 1e-9)
    code, out, _ = run("distance", tri_path, chop_path, "--metric", "symdiff")
    validate("symdiff result", json.loads(out), "distance.schema.json")

    # path between triangle and chopped triangle
    code, out, _ = run("path", tri_path, chop_path)
    check("path exits 0", code == 0)
    path = json.loads(out)
    check("path samples all delzant", path["samples_delzant"] is True)
    check("path local complexity 1", path["local_complexity"] == 1)
    check("path echoes seed", "seed" in path)

    # blow-up / blow-down round trip on the square fan
    square = {"dim": 2, "rays": [[1, 0], [0, 1], [-1, 0], [0, -1]],
              "maximal_cones": [[0, 1], [1, 2], [2, 3], [3, 0]]}
    sq_path = os.path.join(tmp, "square.json")
    with open(sq_path, "w") as f:
        json.dump(square, f)
    code, out, _ = run("blowup", sq_path, "--cone", "0,1")
    check("blowup exits 0", code == 0)
    blown_path = os.path.join(tmp, "blown.json")
    with open(blown_path, "w") as f:
        f.write(out)
    code, out, _ = run("blowdown", blown_path)
    check("blowdown exits 0", code == 0)
    downs = json.loads(out)["blowdowns"]
    # (1,1) plus the two original rays that became sums of their neighbors
    check("three blow-down candidates", len(downs) == 3)
    check("inserted ray among candidates", any(d["ray"] == 4 for d in downs))

    # usage errors exit 2
    code, _, _ = run("verify")
    check("missing argument exits 2", code == 2)
    code, _, _ = run("frobnicate")
    check("unknown subcommand exits 2", code == 2)
    code, _, _ = run("verify", tri_path, "--no-such-flag")
    check("unknown flag exits 2", code == 2)

    # corpus
    code, out, _ = run("corpus")
    check("corpus exits 0", code == 0)
    corpus = json.loads(out)
    check("corpus all_pass", corpus["all_pass"] is True)
    check("corpus echoes seed", "seed" in corpus)

    if not HAVE_JSONSCHEMA:
        print("note: jsonschema module unavailable, structural checks skipped")
    if failures:
        print(f"{len(failures)} CLI checks failed")
        return 1
    print("all CLI checks passed")
    return 0


if __name__ == "__main__":
    sys.exit(main())
