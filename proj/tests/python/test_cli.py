"""End-to-end CLI checks: round trips, exit codes, JSON shapes."""
import json
import os
import subprocess
import sys
import tempfile

CLI = sys.argv[1]


def run(*args, expect=0):
    proc = subprocess.run([CLI, *args], capture_output=True, text=True)
    assert proc.returncode == expect, (
        f"{args}: exit {proc.returncode}, expected {expect}\n{proc.stderr}")
    return proc


def main():
    with tempfile.TemporaryDirectory() as tmp:
        csv_path = os.path.join(tmp, "x.csv")

        run("simulate", "--alpha", "0.6", "--beta", "0.4", "--innovation", "poisson:2",
            "--n", "1000", "--seed", "7", "--out", csv_path)
        with open(csv_path) as fh:
            lines = fh.read().splitlines()
        assert lines[0] == "k,x"
        assert lines[1] == "-1,0" and lines[2] == "0,0"
        assert len(lines) == 1003
        print("ok simulate writes the trajectory CSV")

        est = json.loads(run("estimate", "--in", csv_path, "--mu", "2").stdout)
        assert est["case"] == "regular"
        assert abs(est["rho_hat"] - (est["alpha_hat"] + est["beta_hat"])) < 1e-12
        print("ok estimate returns the JSON estimate")

        # Round trip: the CSV path reproduces the in-memory estimate bit for bit.
        est2 = json.loads(run("estimate", "--in", csv_path, "--mu", "2").stdout)
        assert est == est2
        print("ok estimate round trip is bit-identical")

        cls = json.loads(run("classify", "--alpha", "1", "--beta", "0").stdout)
        assert cls["stability"] == "unstable" and cls["regularity"] == "decomposable"
        print("ok classify reports the regime")

        rep = json.loads(run("mc-compare", "--case", "auto", "--alpha", "1", "--beta", "0",
                             "--innovation", "poisson:2", "--n", "500", "--reps", "2000",
                             "--seed", "7", "--threads", "2").stdout)
        assert abs(rep["empirical"]["variance"] - 3.0) / 3.0 < 0.25
        assert rep["regime"] == "decomposable"
        print("ok mc-compare variance near 3")

        limits = os.path.join(tmp, "limits.csv")
        run("limit-sample", "--case", "decomposable", "--innovation", "poisson:2",
            "--reps", "50", "--seed", "1", "--out", limits)
        with open(limits) as fh:
            rows = fh.read().splitlines()
        assert rows[0] == "index,case,value1,value2,mesh,seed"
        assert len(rows) == 51
        print("ok limit-sample writes draws")

        moments = run("moments", "--alpha", "0.6", "--beta", "0.4", "--innovation",
                      "poisson:2", "--n", "20", "--order", "2").stdout.splitlines()
        assert moments[0] == "n,e_x,e_xx,e_xy,e_yy"
        assert len(moments) == 21
        print("ok moments writes the table")

        # Config file overrides flags.
        cfg = os.path.join(tmp, "cfg.json")
        with open(cfg, "w") as fh:
            json.dump({"alpha": 1.0, "beta": 0.0}, fh)
        cls = json.loads(run("classify", "--alpha", "0.5", "--beta", "0.5",
                             "--config", cfg).stdout)
        assert cls["regularity"] == "decomposable"
        print("ok config file overrides flags")

        # Seed determinism across invocations.
        a = run("simulate", "--alpha", "0.6", "--beta", "0.4", "--innovation",
                "poisson:2", "--n", "100", "--seed", "9").stdout
        b = run("simulate", "--alpha", "0.6", "--beta", "0.4", "--innovation",
                "poisson:2", "--n", "100", "--seed", "9").stdout
        assert a == b
        print("ok identical seeds give identical output")

        run("simulate", "--alpha", "1.4", "--beta", "0", expect=1)
        run("simulate", "--no-such-flag", expect=1)
        run("estimate", "--in", os.path.join(tmp, "missing.csv"), "--mu", "2", expect=1)
        run("estimate", "--in", csv_path, expect=1)  # --mu required
        print("ok validation errors exit with code 1")

    print("all CLI checks passed")


if __name__ == "__main__":
    main()
