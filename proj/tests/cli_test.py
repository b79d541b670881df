"""End-to-end checks of the g2count executable: exit codes, JSON schema
conformance, and agreement with a brute-force point count done here."""

import json
import os
import subprocess
import tempfile
import unittest

import jsonschema

CLI = os.environ.get("G2COUNT_CLI", "g2count")
SCHEMA_PATH = os.environ.get("G2COUNT_SCHEMA", "docs/output.schema.json")

with open(SCHEMA_PATH) as fh:
    SCHEMA = json.load(fh)


def run(*args):
    proc = subprocess.run([CLI, *args, "--quiet"], capture_output=True, text=True, timeout=600)
    return proc.returncode, proc.stdout, proc.stderr


def run_json(*args):
    code, out, err = run(*args, "--json")
    doc = json.loads(out)
    jsonschema.validate(doc, SCHEMA)
    return code, doc, err


# Brute-force counts over F_p and F_{p^2} = F_p[t] / (t^2 - n).
def nonresidue(p):
    return next(n for n in range(2, p) if pow(n, (p - 1) // 2, p) == p - 1)


def f2_mul(a, b, p, n):
    return ((a[0] * b[0] + n * a[1] * b[1]) % p, (a[0] * b[1] + a[1] * b[0]) % p)


def f2_pow(a, e, p, n):
    r = (1, 0)
    while e:
        if e & 1:
            r = f2_mul(r, a, p, n)
        a = f2_mul(a, a, p, n)
        e >>= 1
    return r


def chi_bruteforce(p, coeffs):
    deg = len(coeffs) - 1
    lead = coeffs[-1]

    def ev1(x):
        return sum(c * pow(x, i, p) for i, c in enumerate(coeffs)) % p

    def leg1(v):
        return 0 if v == 0 else (1 if pow(v, (p - 1) // 2, p) == 1 else -1)

    inf = 1 if deg == 5 else 1 + leg1(lead)
    n1 = sum(1 + leg1(ev1(x)) for x in range(p)) + inf
    n = nonresidue(p)
    n2 = 0
    for a in range(p):
        for b in range(p):
            acc, xp = (0, 0), (1, 0)
            for c in coeffs:
                acc = ((acc[0] + c * xp[0]) % p, (acc[1] + c * xp[1]) % p)
                xp = f2_mul(xp, (a, b), p, n)
            if acc == (0, 0):
                n2 += 1
            else:
                n2 += 2 if f2_pow(acc, (p * p - 1) // 2, p, n) == (1, 0) else 0
    # Leading coefficient is a square in F_{p^2}.
    n2 += 1 if deg == 5 else 2
    s1 = p + 1 - n1
    # N2 = q^2 + 1 - (s1^2 - 2 a2) with a2 = s2 + 2q.
    a2 = (n2 - p * p - 1 + s1 * s1) // 2
    return s1, a2 - 2 * p


def poly_mod(coeffs, l):
    return [c % l for c in coeffs]


def strip_micros(doc):
    for row in doc.get("primes", []):
        row.pop("micros", None)
    return doc


Y2_X5_1 = ("p=11", "P=[1,0,0,0,0,1]")
RM_CURVE = "p=13;P=[11,12,6,6,11,1]"


class CountTests(unittest.TestCase):
    def test_naive_matches_bruteforce(self):
        code, doc, _ = run_json("count", "--naive", *Y2_X5_1)
        self.assertEqual(code, 0)
        s1, s2 = chi_bruteforce(11, [1, 0, 0, 0, 0, 1])
        self.assertEqual((doc["chi"]["s1"], doc["chi"]["s2"]), (s1, s2))
        self.assertEqual(doc["mode"], "naive")

    def test_siegel_oracle_agrees_with_naive(self):
        code, doc, _ = run_json("count", "--siegel", "--oracle", "--ext-guard", "20", *Y2_X5_1)
        self.assertEqual(code, 0)
        s1, s2 = chi_bruteforce(11, [1, 0, 0, 0, 0, 1])
        self.assertEqual((doc["chi"]["s1"], doc["chi"]["s2"]), (s1, s2))
        used = [r["ell"] for r in doc["primes"] if r["status"] == "used"]
        prod = 1
        for l in used:
            prod *= l
        self.assertGreater(prod, 8 * 11)
        self.assertEqual(int(doc["crt"]["s1"]["modulus"]), prod)

    def test_jobs_do_not_change_output(self):
        args = ("count", "--siegel", "--ext-guard", "20", "--seed", "5", *Y2_X5_1)
        _, one, _ = run_json(*args)
        _, four, _ = run_json(*args, "--jobs", "4")
        _, again, _ = run_json(*args)
        self.assertEqual(strip_micros(one), strip_micros(four))
        self.assertEqual(strip_micros(one), strip_micros(again))

    def test_verify_flag(self):
        code, doc, _ = run_json("count", "--siegel", "--verify", "--ext-guard", "20", *Y2_X5_1)
        self.assertEqual(code, 0)
        self.assertTrue(doc["verified"])

    def test_hilbert_mode(self):
        code, doc, _ = run_json("count", "--hilbert", "--disc", "5", "--max-prime", "41", "--curve", RM_CURVE)
        self.assertEqual(code, 0)
        s1, s2 = chi_bruteforce(13, [11, 12, 6, 6, 11, 1])
        self.assertEqual((doc["chi"]["s1"], doc["chi"]["s2"]), (s1, s2))
        self.assertGreater(int(doc["norm_B"]), 16 * 13)
        self.assertEqual(doc["candidates"], 1)

    def test_exhaustion_exit_code(self):
        code, doc, err = run_json("count", "--siegel", "--primes", "2", *Y2_X5_1)
        self.assertEqual(code, 3)
        self.assertEqual(doc["error"]["class"], "Exhausted")
        self.assertEqual(doc["error"]["exit_code"], 3)
        self.assertIsNone(doc["chi"])
        self.assertIn("Exhausted", err)

    def test_modeq_dir_without_files_falls_back(self):
        with tempfile.TemporaryDirectory() as d:
            code, doc, _ = run_json("count", "--siegel", "--modeq-dir", d, "--ext-guard", "20", *Y2_X5_1)
        self.assertEqual(code, 0)
        self.assertEqual(doc["provider"], "modeq-dir+oracle")

    def test_malformed_curve(self):
        code, doc, err = run_json("count", "--naive", "p=11", "P=[1,0,x]")
        self.assertEqual(code, 2)
        self.assertEqual(doc["error"]["class"], "ParseError")
        self.assertIn("ParseError", err)
        code, _, _ = run("count", "--naive", "p=12", "P=[1,0,0,0,0,1]")
        self.assertEqual(code, 2)

    def test_usage_errors(self):
        self.assertEqual(run("count", "--naive", "--siegel", *Y2_X5_1)[0], 2)
        self.assertEqual(run("count", "--bogus", *Y2_X5_1)[0], 2)
        self.assertEqual(run("count", "--naive")[0], 2)
        self.assertEqual(run()[0], 2)
        self.assertEqual(run("torsion", "-l", "11", *Y2_X5_1)[0], 2)

    def test_text_output(self):
        code, out, _ = run("count", "--naive", *Y2_X5_1)
        self.assertEqual(code, 0)
        self.assertIn("s1=4 s2=-16", out)


class ClassifyTests(unittest.TestCase):
    def test_f97_table(self):
        code, doc, _ = run_json("classify", "-X", "30", "p=97", "P=[3,1,4,1,5,9]")
        self.assertEqual(code, 0)
        self.assertEqual([r["ell"] for r in doc["rows"]], [2, 3, 5, 7, 11, 13, 17, 19, 23, 29])
        s1, s2 = chi_bruteforce(97, [3, 1, 4, 1, 5, 9])
        q = 97
        chi = [q * q, -q * s1, s2 + 2 * q, -s1, 1]
        for r in doc["rows"]:
            self.assertEqual(r["chi_mod"], poly_mod(chi, r["ell"]))
        num, _, den = doc["proportion"]["value"].partition("/")
        value = int(num) / int(den or 1)
        self.assertTrue(0 <= value <= 1)
        self.assertEqual(doc["proportion"]["reference"], "3/8")

    def test_empty_range(self):
        code, doc, _ = run_json("classify", "-X", "1", "p=97", "P=[3,1,4,1,5,9]")
        self.assertEqual(code, 2)
        self.assertEqual(doc["error"]["class"], "EmptyRange")

    def test_rm_split_primes(self):
        code, doc, _ = run_json("classify", "--disc", "5", "--curve", RM_CURVE)
        self.assertEqual(code, 0)
        self.assertEqual(doc["rm"]["reference"], "1/2")
        self.assertGreater(doc["rm"]["split_betas"], 0)

    def test_rm_without_multiplication(self):
        # xi-discriminant 29 is not 5 times a square.
        code, doc, _ = run_json("classify", "--disc", "5", "p=13", "P=[1,2,0,5,0,1]")
        self.assertEqual(code, 2)
        self.assertEqual(doc["error"]["class"], "ValidationError")


class ReconstructTests(unittest.TestCase):
    def test_worked_instance(self):
        code, doc, _ = run_json("rm-reconstruct", "--disc", "5", "--q", "13", "-r", "11:6", "-r", "19:12")
        self.assertEqual(code, 0)
        self.assertEqual(doc["psi"], "1+2*w")
        self.assertEqual(doc["psi_coords"], [1, 2])
        self.assertEqual((doc["chi"]["s1"], doc["chi"]["s2"]), (4, -1))

    def test_explicit_generators(self):
        # 3+w and its conjugate 4-w lie over 11.
        code, doc, _ = run_json("rm-reconstruct", "--q", "13", "-r", "11:3,1:6", "-r", "19:4,1:12")
        self.assertEqual(code, 0)
        self.assertEqual(doc["psi"], "1+2*w")

    def test_bound_not_met(self):
        code, doc, _ = run_json("rm-reconstruct", "--q", "13", "-r", "11:6")
        self.assertEqual(code, 2)
        self.assertEqual(doc["error"]["class"], "BoundNotMet")
        self.assertIn("16q = 208", doc["error"]["message"])

    def test_bad_residue_syntax(self):
        self.assertEqual(run("rm-reconstruct", "--q", "13", "-r", "11")[0], 2)

    def test_end_to_end(self):
        code, doc, _ = run_json("rm-reconstruct", "--max-prime", "41", "--curve", RM_CURVE)
        self.assertEqual(code, 0)
        s1, s2 = chi_bruteforce(13, [11, 12, 6, 6, 11, 1])
        self.assertEqual((doc["chi"]["s1"], doc["chi"]["s2"]), (s1, s2))


class TorsionAndPropsTests(unittest.TestCase):
    def test_two_torsion(self):
        code, doc, _ = run_json("torsion", "-l", "2", "p=13", "P=[1,2,0,5,0,1]")
        self.assertEqual(code, 0)
        s1, s2 = chi_bruteforce(13, [1, 2, 0, 5, 0, 1])
        q = 13
        chi = [q * q, -q * s1, s2 + 2 * q, -s1, 1]
        self.assertEqual(doc["frobenius_charpoly"], poly_mod(chi, 2))
        self.assertTrue(doc["multiplier_identity"])

    def test_verify_props(self):
        code, doc, _ = run_json("verify-props", "p=13", "P=[1,2,0,5,0,1]")
        self.assertEqual(code, 0)
        self.assertTrue(doc["all_hold"])
        names = {p["name"] for p in doc["properties"]}
        self.assertIn("weil_ruck", names)
        self.assertIn("pairing_bilinear_l3", names)


if __name__ == "__main__":
    unittest.main()
