#!/usr/bin/env python3
"""End-to-end checks for the pellredei CLI. Usage: cli_test.py <path-to-cli>."""

import os
import subprocess
import sys
import tempfile

CLI = None
PASSED = 0


def run(*args, expect=0):
    proc = subprocess.run([CLI, *args], capture_output=True, text=True, timeout=600)
    if proc.returncode != expect:
        raise AssertionError(
            f"{' '.join(args)}: exit {proc.returncode}, expected {expect}\n"
            f"stdout: {proc.stdout}\nstderr: {proc.stderr}"
        )
    return proc


def check(name, fn):
    global PASSED
    fn()
    PASSED += 1
    print(f"ok: {name}")


def keygen(tmp, tag, seed, bits=64):
    pub = os.path.join(tmp, f"{tag}.pub")
    sec = os.path.join(tmp, f"{tag}.sec")
    run("keygen", "--bits", str(bits), "--seed", seed, "--out-pub", pub, "--out-sec", sec)
    return pub, sec


def main():
    with tempfile.TemporaryDirectory() as tmp:
        pub, sec = keygen(tmp, "k1", "12345")

        def deterministic_keygen():
            pub_a, sec_a = keygen(tmp, "det-a", "777")
            pub_b, sec_b = keygen(tmp, "det-b", "777")
            pub_c, sec_c = keygen(tmp, "det-c", "778")
            assert open(pub_a, "rb").read() == open(pub_b, "rb").read(), "pub differs"
            assert open(sec_a, "rb").read() == open(sec_b, "rb").read(), "sec differs"
            assert open(pub_a, "rb").read() != open(pub_c, "rb").read(), "seed ignored"

        def roundtrip():
            plain = os.path.join(tmp, "plain.bin")
            ct = os.path.join(tmp, "ct.txt")
            out = os.path.join(tmp, "out.bin")
            data = os.urandom(1024)
            with open(plain, "wb") as f:
                f.write(data)
            run("encrypt", "--pub", pub, "--in", plain, "--out", ct)
            run("decrypt", "--sec", sec, "--in", ct, "--out", out)
            assert open(out, "rb").read() == data, "roundtrip mismatch"

        def empty_file():
            plain = os.path.join(tmp, "empty.bin")
            ct = os.path.join(tmp, "empty-ct.txt")
            out = os.path.join(tmp, "empty-out.bin")
            open(plain, "wb").close()
            run("encrypt", "--pub", pub, "--in", plain, "--out", ct)
            assert open(ct, "rb").read() == b"", "empty plaintext must give empty ciphertext"
            run("decrypt", "--sec", sec, "--in", ct, "--out", out)
            assert open(out, "rb").read() == b"", "empty roundtrip mismatch"

        def corrupt_key():
            bad = os.path.join(tmp, "bad.pub")
            lines = open(pub).read().splitlines(keepends=True)
            with open(bad, "w") as f:
                for line in lines:
                    f.write("n=zz\n" if line.startswith("n=") else line)
            plain = os.path.join(tmp, "p2.bin")
            with open(plain, "wb") as f:
                f.write(b"x")
            proc = run("encrypt", "--pub", bad, "--in", plain,
                       "--out", os.path.join(tmp, "c2.txt"), expect=1)
            assert "n" in proc.stderr, f"diagnostic must name the field: {proc.stderr}"

        def even_exponent():
            run("keygen", "--bits", "64", "--e", "4",
                "--out-pub", os.path.join(tmp, "e4.pub"),
                "--out-sec", os.path.join(tmp, "e4.sec"), expect=2)

        def selftest():
            proc = run("selftest")
            assert "D=54" in proc.stdout, "worked-example D missing"
            assert "C=38" in proc.stdout, "worked-example ciphertext missing"
            assert "FAIL" not in proc.stdout, f"selftest reported a failure:\n{proc.stdout}"
            assert proc.stdout.count("PASS") >= 20, "too few checks ran"

        def bench_table():
            proc = run("bench", "--table")
            rows = [l for l in proc.stdout.splitlines()[1:] if l.strip()]
            assert len(rows) == 5, f"expected 5 data rows, got {len(rows)}"
            for scheme in ("rsa", "conic-i", "conic-ii", "cubic-ii", "pell-redei"):
                assert any(r.startswith(scheme) for r in rows), f"missing row {scheme}"

        def bench_run():
            proc = run("bench", "--bits", "512", "--trials", "10", "--seed", "9")
            assert "scheme=pell-redei" in proc.stdout and "scheme=rsa-2block" in proc.stdout
            assert "ratio mean=" in proc.stdout
            run("bench", "--bits", "777", "--trials", "10", expect=1)

        def frame_failures():
            plain = os.path.join(tmp, "p3.bin")
            ct = os.path.join(tmp, "c3.txt")
            with open(plain, "wb") as f:
                f.write(b"attack at dawn")
            run("encrypt", "--pub", pub, "--in", plain, "--out", ct)

            tampered = os.path.join(tmp, "c3-tampered.txt")
            first, rest = open(ct).read().split("\n", 1)
            c_field, d_field = first.split(" ")
            digit = c_field[-1]
            flipped = "0" if digit != "0" else "1"
            with open(tampered, "w") as f:
                f.write(f"{c_field[:-1]}{flipped} {d_field}\n{rest}")
            run("decrypt", "--sec", sec, "--in", tampered,
                "--out", os.path.join(tmp, "o3.bin"), expect=3)

            _, wrong_sec = keygen(tmp, "k2", "54321")
            run("decrypt", "--sec", wrong_sec, "--in", ct,
                "--out", os.path.join(tmp, "o4.bin"), expect=3)

        check("deterministic keygen under --seed", deterministic_keygen)
        check("1 KiB roundtrip", roundtrip)
        check("empty file roundtrip", empty_file)
        check("corrupt key names the field, exit 1", corrupt_key)
        check("even public exponent rejected, exit 2", even_exponent)
        check("selftest prints the worked example", selftest)
        check("bench --table prints five rows", bench_table)
        check("bench comparison runs; bad size exits 1", bench_run)
        check("tampered ciphertext and wrong key exit 3", frame_failures)

    print(f"cli_test: {PASSED} checks passed")


if __name__ == "__main__":
    if len(sys.argv) != 2:
        print("usage: cli_test.py <path-to-cli>", file=sys.stderr)
        sys.exit(2)
    CLI = sys.argv[1]
    main()
