import os
import subprocess

CLI = os.environ["CASSON_CLI"]
DATA = os.environ["CASSON_DATA"]

NU = os.path.join(DATA, "nu.json")
MIXED = os.path.join(DATA, "mixed.json")


def run(*args, **kwargs):
    return subprocess.run([CLI, *args], capture_output=True, text=True, **kwargs)


def test_eval():
    r = run("eval", "--table", NU, "--word", "nu^3")
    assert r.returncode == 0
    assert r.stdout == "lambda = 6\ntau = [[1,2,3,3],[4,5,6,3]]\nell = 3\nlength = 3\n"


def test_eval_inverse_word():
    r = run("eval", "--table", NU, "--word", "nu nu^-1")
    assert r.returncode == 0
    assert r.stdout == "lambda = 0\ntau = []\nell = 0\nlength = 2\n"


def test_bound():
    r = run("bound", "--table", NU, "--word", "nu^10")
    assert r.returncode == 0
    assert r.stdout == (
        "length = 10\n"
        "lambda = 90\n"
        "per_step_bound = 1820\n"
        "quadratic_bound = 2200\n"
        "ratio = 9/10\n"
        "certification = PASS\n"
    )


def test_constants():
    r = run("constants", "--table", NU)
    assert r.returncode == 0
    assert r.stdout == "genus = 3\nC1 = 1\nC2 = 20\nC3 = 2\nC = 22\n"

    r = run("constants", "--table", MIXED)
    assert r.returncode == 0
    assert r.stdout == "genus = 4\nC1 = 4\nC2 = 896\nC3 = 7\nC = 903\n"


def test_nu_family_csv():
    r = run("nu-family", "--n-max", "5")
    assert r.returncode == 0
    assert r.stdout == (
        "length,trial,lambda,per_step_bound,quadratic_bound,ratio_num,ratio_den\n"
        "1,0,0,2,22,0,1\n"
        "2,0,2,44,88,1,2\n"
        "3,0,6,126,198,2,3\n"
        "4,0,12,248,352,3,4\n"
        "5,0,20,410,550,4,5\n"
    )


def test_nu_family_out_file(tmp_path):
    out = tmp_path / "family.csv"
    r = run("nu-family", "--n-max", "5", "--out", str(out))
    assert r.returncode == 0
    assert r.stdout == ""
    assert out.read_text() == run("nu-family", "--n-max", "5").stdout


def test_sample_is_byte_deterministic(tmp_path):
    args = ("sample", "--table", MIXED, "--lengths", "0,5,40", "--trials", "3",
            "--seed", "99")
    r1 = run(*args)
    r2 = run(*args)
    assert r1.returncode == 0
    assert r1.stdout == r2.stdout
    lines = r1.stdout.splitlines()
    assert lines[0] == "length,trial,lambda,per_step_bound,quadratic_bound,ratio_num,ratio_den"
    assert len(lines) == 10
    assert lines[1] == "0,0,0,0,0,0,1"

    out = tmp_path / "rows.csv"
    r3 = run(*args, "--out", str(out))
    assert r3.returncode == 0
    assert out.read_text() == r1.stdout


def test_validate():
    r = run("validate", "--table", NU)
    assert r.returncode == 0
    assert r.stdout == "table OK: genus 3, 1 generators\n"

    r = run("validate", "--tri", "[[1,2,3,1]]", "--genus", "3")
    assert r.returncode == 0
    assert r.stdout == "tri-vector OK: 1 terms, ell = 1\n"

    r = run("validate")
    assert r.returncode == 2


def test_input_errors_exit_2():
    assert run("eval", "--table", NU, "--word", "nu^").returncode == 2
    assert run("eval", "--table", os.path.join(DATA, "void.json"),
               "--word", "nu").returncode == 2
    assert run("eval", "--table", NU, "--word", "ghost").returncode == 2
    assert run("eval", "--bogus-flag").returncode == 2
    assert run().returncode == 2
    assert run("sample", "--table", NU, "--lengths", "3,x", "--trials", "1",
               "--seed", "0").returncode == 2
    assert run("nu-family", "--n-max", "0").returncode == 2


def test_help_exits_0():
    r = run("--help")
    assert r.returncode == 0
    assert "eval" in r.stdout and "bound" in r.stdout
