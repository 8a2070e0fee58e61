"""End-to-end checks of the hvectl binary (path in $HVECTL)."""

import json
import os
import random
import subprocess
import sys
import tempfile
import unittest
from pathlib import Path

HVECTL = os.environ.get("HVECTL", "hvectl")
SCHEMES = ["bw2", "ll3", "dhve3", "asym1"]


class Tool:
    def __init__(self, root: Path):
        self.root = root
        self.seed = 1000

    def run(self, *args, expect=0, seed=True):
        cmd = [HVECTL]
        if seed:
            self.seed += 1
            cmd += ["--seed", str(self.seed)]
        cmd += [str(a) for a in args]
        p = subprocess.run(cmd, capture_output=True, text=True)
        if expect is not None and p.returncode != expect:
            raise AssertionError(f"{cmd} -> {p.returncode}\nstdout: {p.stdout}\nstderr: {p.stderr}")
        return p

    def keygen(self, name, scheme, *extra):
        out = self.root / name
        self.run("keygen", "--scheme", scheme, "--out-dir", out, *extra)
        return out / "pk.key", out / "sk.key"

    def payload(self, data: bytes):
        self.seed += 1
        p = self.root / f"payload{self.seed}"
        p.write_bytes(data)
        return p

    def encrypt(self, pk, index, payload=b"x", sidecar=True, **kw):
        args = ["encrypt", "--pk", pk, "--index", index, "--payload", self.payload(payload)]
        for k, v in kw.items():
            args += [f"--{k}", v]
        if sidecar:
            args.append("--sidecar")
        return self.run(*args).stdout.strip()

    def token(self, pk, sk, spec):
        self.seed += 1
        out = self.root / f"tok{self.seed}"
        self.run("token", "--sk", sk, "--pk", pk, "--spec", spec, "--out", out)
        return out

    def search(self, pk, index, token, *extra, expect=0):
        p = self.run("search", "--pk", pk, "--index", index, "--token", token, *extra,
                     expect=expect, seed=False)
        return [line.split("\t")[0] for line in p.stdout.splitlines() if line]

    def inspect(self, path):
        return json.loads(self.run("inspect", path, seed=False).stdout)


def sidecar(index: Path):
    lines = Path(str(index) + ".plain.jsonl").read_text().splitlines()
    return [json.loads(l) for l in lines]


class HvectlTest(unittest.TestCase):
    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.root = Path(self.tmp.name)
        self.t = Tool(self.root)

    def tearDown(self):
        self.tmp.cleanup()

    def test_keygen_counts(self):
        pk, sk = self.t.keygen("k", "ll3", "--fields", "4")
        info = self.t.inspect(pk)
        self.assertEqual(info["l"], 4)
        self.assertEqual(info["group_elements"], 3 * (7 + 2 * 4))
        self.assertEqual(self.t.inspect(sk)["kind"], "secret-key")
        pk, _ = self.t.keygen("b", "bw2", "--fields", "3")
        self.assertEqual(self.t.inspect(pk)["group_elements"], 6 * 3 + 8)

    def test_keygen_errors(self):
        self.t.run("keygen", "--scheme", "ll3", "--fields", "0", "--out-dir", self.root / "z", expect=1)
        self.t.run("keygen", "--scheme", "nope", "--fields", "2", "--out-dir", self.root / "z", expect=1)
        self.t.run("keygen", "--scheme", "asym1", "--fields", "2", "--suite", "bls12-381-sym",
                   "--out-dir", self.root / "z", expect=1)
        self.t.run("keygen", "--fields", "2", "--out-dir", self.root / "z", expect=1)

    def test_encoded_length(self):
        pk, _ = self.t.keygen("k", "bw2", "--encode", "cmp", "--domain", "10", "--width", "2")
        info = self.t.inspect(pk)
        self.assertEqual(info["l"], 20)
        self.assertEqual((info["n"], info["w"], info["encoding"]), (10, 2, "cmp"))
        pk, _ = self.t.keygen("r", "bw2", "--encode", "range", "--domain", "3", "--width", "2")
        self.assertEqual(self.t.inspect(pk)["l"], 12)

    def test_wildcard_search_and_payload(self):
        pk, sk = self.t.keygen("k", "asym1", "--fields", "2")
        idx = self.root / "idx"
        rid = self.t.encrypt(pk, idx, payload=b"secret", attrs="a,b")
        tok = self.t.token(pk, sk, "*;*")
        out = self.root / "out"
        p = self.t.run("search", "--pk", pk, "--index", idx, "--token", tok, "--out-dir", out, seed=False)
        rid_out, path = p.stdout.strip().split("\t")
        self.assertEqual(rid_out, rid)
        self.assertEqual(Path(path).read_bytes(), b"secret")

    def test_large_payload_sidecar(self):
        pk, sk = self.t.keygen("k", "bw2", "--fields", "1")
        idx = self.root / "idx"
        data = os.urandom(70 * 1024)
        self.t.encrypt(pk, idx, payload=data, attrs="a")
        self.assertEqual(len(list(Path(str(idx) + ".blobs").iterdir())), 1)
        self.assertLess(idx.stat().st_size, 8 * 1024)
        out = self.root / "out"
        p = self.t.run("search", "--pk", pk, "--index", idx, "--token", self.t.token(pk, sk, "=a"),
                       "--out-dir", out, seed=False)
        self.assertEqual(Path(p.stdout.strip().split("\t")[1]).read_bytes(), data)

    def test_hundred_records(self):
        pk, sk = self.t.keygen("k", "asym1", "--fields", "2")
        idx = self.root / "idx"
        rng = random.Random(5)
        ids = [self.t.encrypt(pk, idx, attrs=f"{rng.choice('abc')},{rng.randrange(10)}", sidecar=False)
               for _ in range(100)]
        info = self.t.inspect(idx)
        self.assertEqual(info["records"], 100)
        self.assertEqual(info["ids"], ids)
        self.assertEqual(len(set(ids)), 100)

    def test_encrypt_errors(self):
        pk, _ = self.t.keygen("k", "bw2", "--encode", "cmp", "--domain", "5", "--width", "1")
        idx = self.root / "idx"
        self.t.run("encrypt", "--pk", pk, "--index", idx, "--payload", self.t.payload(b"x"),
                   "--values", "0", expect=1)
        self.t.run("encrypt", "--pk", pk, "--index", idx, "--payload", self.t.payload(b"x"),
                   "--values", "6", expect=1)
        self.t.run("encrypt", "--pk", pk, "--index", idx, "--payload", self.t.payload(b"x"),
                   "--attrs", "a", expect=1)
        self.t.encrypt(pk, idx, values="5")
        pk2, _ = self.t.keygen("k2", "bw2", "--fields", "2")
        self.t.run("encrypt", "--pk", pk2, "--index", self.root / "i2", "--payload",
                   self.t.payload(b"x"), "--attrs", "a", expect=1)
        self.t.encrypt(pk2, self.root / "i2", attrs="a,b", id="r1")
        self.t.run("encrypt", "--pk", pk2, "--index", self.root / "i2", "--payload",
                   self.t.payload(b"x"), "--attrs", "a,b", "--id", "r1", expect=1)
        self.t.run("encrypt", "--pk", pk2, "--index", idx, "--payload", self.t.payload(b"x"),
                   "--attrs", "a,b", expect=1)

    def test_cmp_oracle(self):
        pk, sk = self.t.keygen("k", "ll3", "--encode", "cmp", "--domain", "8", "--width", "1")
        idx = self.root / "idx"
        rng = random.Random(11)
        for _ in range(20):
            self.t.encrypt(pk, idx, values=str(rng.randint(1, 8)))
        got = set(self.t.search(pk, idx, self.t.token(pk, sk, "<=5")))
        want = {r["id"] for r in sidecar(idx) if r["values"][0] <= 5}
        self.assertEqual(got, want)
        self.assertTrue(0 < len(want) < 20)

    def test_round_trip_all_schemes_all_families(self):
        rng = random.Random(3)
        families = {
            "eq": ([], lambda: ",".join(rng.choice("ab") for _ in range(3)),
                   ["=a;*;=b", "*;*;*", "=b;=b;=a"],
                   lambda spec, attrs: all(s == "*" or s[1:] == a
                                           for s, a in zip(spec.split(";"), attrs))),
            "cmp": (["--encode", "cmp", "--domain", "4", "--width", "2"],
                    lambda: f"{rng.randint(1, 4)},{rng.randint(1, 4)}",
                    ["<=2;*", "<=3;<=1", "*;*"],
                    lambda spec, v: all(s == "*" or x <= int(s[2:]) for s, x in zip(spec.split(";"), v))),
            "range": (["--encode", "range", "--domain", "4", "--width", "2"],
                      lambda: f"{rng.randint(1, 4)},{rng.randint(1, 4)}",
                      ["[2,3];*", ">=3;<=2", "=4;[1,4]"],
                      None),
            "subset": (["--encode", "subset", "--domain", "4", "--width", "2"],
                       lambda: f"{rng.randint(1, 4)},{rng.randint(1, 4)}",
                       ["in{1,4};*", "in{2};in{1,2,3}", "in{};*"],
                       None),
        }

        def interval(s):
            if s == "*":
                return 1, 4
            if s.startswith("<="):
                return 1, int(s[2:])
            if s.startswith(">="):
                return int(s[2:]), 4
            if s.startswith("="):
                return int(s[1:]), int(s[1:])
            lo, hi = s[1:-1].split(",")
            return int(lo), int(hi)

        def range_eval(spec, v):
            return all(lo <= x <= hi for (lo, hi), x in zip(map(interval, spec.split(";")), v))

        def subset_eval(spec, v):
            sets = []
            for s in spec.split(";"):
                body = s[3:-1] if s.startswith("in{") else "1,2,3,4"
                sets.append({int(t) for t in body.split(",") if t})
            return all(x in a for a, x in zip(sets, v))

        for scheme in SCHEMES:
            for fam, (extra, draw, specs, plain_eval) in families.items():
                with self.subTest(scheme=scheme, family=fam):
                    plain_eval = plain_eval or (range_eval if fam == "range" else subset_eval)
                    pk, sk = self.t.keygen(f"{scheme}-{fam}", scheme,
                                           *(extra or ["--fields", "3"]))
                    idx = self.root / f"{scheme}-{fam}.idx"
                    key = "attrs" if fam == "eq" else "values"
                    for _ in range(8):
                        self.t.encrypt(pk, idx, **{key: draw()})
                    rows = sidecar(idx)
                    for spec in specs:
                        got = self.t.search(pk, idx, self.t.token(pk, sk, spec))
                        want = [r["id"] for r in rows if plain_eval(spec, r[key])]
                        self.assertEqual(got, want, spec)

    def test_delegation_matches_fresh_token(self):
        pk, sk = self.t.keygen("k", "dhve3", "--fields", "3")
        idx = self.root / "idx"
        rng = random.Random(9)
        for _ in range(12):
            self.t.encrypt(pk, idx, attrs=",".join(rng.choice("ab") for _ in range(3)))
        base = self.t.token(pk, sk, "=a;?;?")
        for fix, fresh_spec in [("2=b", "=a;=b;?"), ("3=*", "=a;?;*"), ("2=a", "=a;=a;?")]:
            out = self.root / f"del-{fix}"
            self.t.run("delegate", "--pk", pk, "--token", base, "--fix", fix, "--out", out)
            self.assertEqual(self.t.search(pk, idx, out),
                             self.t.search(pk, idx, self.t.token(pk, sk, fresh_spec)))
        step1 = self.root / "del-2=b"
        step2 = self.root / "step2"
        self.t.run("delegate", "--pk", pk, "--token", step1, "--fix", "3=a", "--out", step2)
        self.assertEqual(self.t.search(pk, idx, step2),
                         self.t.search(pk, idx, self.t.token(pk, sk, "=a;=b;=a")))
        self.assertEqual(self.t.inspect(step2)["spec"], "=a;=b;=a")
        self.t.run("delegate", "--pk", pk, "--token", step2, "--fix", "2=a", "--out", step2, expect=1)

    def test_delegate_rejects_other_schemes(self):
        pk, sk = self.t.keygen("k", "ll3", "--fields", "2")
        tok = self.t.token(pk, sk, "=a;*")
        self.t.run("delegate", "--pk", pk, "--token", tok, "--fix", "2=a", "--out",
                   self.root / "x", expect=1)
        self.t.run("token", "--sk", sk, "--pk", pk, "--spec", "=a;?", "--out", self.root / "y", expect=1)

    def test_foreign_token_matches_nothing(self):
        pk, sk = self.t.keygen("k", "bw2", "--fields", "2")
        pk2, sk2 = self.t.keygen("k2", "bw2", "--fields", "2")
        idx = self.root / "idx"
        for i in range(50):
            self.t.encrypt(pk, idx, attrs=f"a,{i % 3}", sidecar=False)
        foreign = self.t.token(pk2, sk2, "*;*")
        self.assertEqual(self.t.search(pk, idx, foreign), [])
        self.t.search(pk, idx, foreign, "--fail-empty", expect=3)
        self.assertEqual(len(self.t.search(pk, idx, self.t.token(pk, sk, "*;*"))), 50)

    def test_raw_count_and_threads(self):
        pk, sk = self.t.keygen("k", "bw2", "--fields", "3")
        idx = self.root / "idx"
        for i in range(5):
            self.t.encrypt(pk, idx, attrs=f"a,{i},c")
        tok = self.t.token(pk, sk, "=a;*;=c")
        p = self.t.run("search", "--pk", pk, "--index", idx, "--token", tok, "--raw-count",
                       "--threads", "3", seed=False)
        self.assertEqual(len(p.stdout.splitlines()), 5)
        self.assertIn("5 records, 50 pairings", p.stderr)

    def test_truncated_tail(self):
        pk, sk = self.t.keygen("k", "asym1", "--fields", "1")
        idx = self.root / "idx"
        first = self.t.encrypt(pk, idx, attrs="a")
        self.t.encrypt(pk, idx, attrs="a")
        data = idx.read_bytes()
        idx.write_bytes(data[:-7])
        tok = self.t.token(pk, sk, "*")
        p = self.t.run("search", "--pk", pk, "--index", idx, "--token", tok, seed=False)
        self.assertEqual(p.stdout.split(), [first])
        self.assertIn("truncated", p.stderr)
        third = self.t.encrypt(pk, idx, attrs="a")
        self.assertEqual(self.t.search(pk, idx, tok), [first, third])

    def test_decode_errors(self):
        pk, sk = self.t.keygen("k", "ll3", "--fields", "1")
        bad = self.root / "bad.key"
        data = bytearray(pk.read_bytes())
        data[len(data) // 2] ^= 1
        bad.write_bytes(bytes(data))
        self.t.run("token", "--sk", sk, "--pk", bad, "--spec", "*", "--out", self.root / "t", expect=2)
        self.t.run("inspect", bad, expect=2)
        self.t.run("token", "--sk", sk, "--pk", self.root / "missing", "--spec", "*",
                   "--out", self.root / "t", expect=1)
        self.t.run("bogus", expect=1)


if __name__ == "__main__":
    unittest.main(argv=[sys.argv[0], "-v"])
