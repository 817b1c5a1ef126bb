"""Command-line surface: exit codes, formats, determinism."""

import json
import subprocess
import sys

from fanweaver.cli import main
from fanweaver.codec import read_planar_code, write_planar_code, write_text
from fanweaver.spheres import canonical_form, icosahedron, tetrahedron, validate

TETRA_TEXT = "4\n0 1 2\n0 1 3\n0 2 3\n1 2 3\n"
TORUS_TEXT = "7\n" + "\n".join(
    f"{i} {(i + 1) % 7} {(i + 3) % 7}" for i in range(7)
) + "\n" + "\n".join(f"{i} {(i + 2) % 7} {(i + 3) % 7}" for i in range(7)) + "\n"


def run(args, capsys):
    code = main(args)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_validate_ok(tmp_path, capsys):
    p = tmp_path / "t.txt"
    p.write_text(TETRA_TEXT)
    code, out, _ = run(["validate", str(p)], capsys)
    assert code == 0
    assert "m=4" in out and "3^4" in out


def test_validate_torus_exit2(tmp_path, capsys):
    p = tmp_path / "torus.txt"
    p.write_text(TORUS_TEXT)
    code, _, err = run(["validate", str(p)], capsys)
    assert code == 2
    assert "invalid" in err


def test_validate_planar_code_multi(tmp_path, capsys):
    p = tmp_path / "s.pc"
    p.write_bytes(write_planar_code([tetrahedron(), icosahedron(), tetrahedron()]))
    code, out, _ = run(["validate", str(p)], capsys)
    assert code == 0
    assert out.count("record") == 3


def test_census_table(capsys):
    code, out, _ = run(["census", "-M", "8"], capsys)
    assert code == 0
    rows = [ln.split() for ln in out.splitlines()[1:]]
    assert [int(r[1]) for r in rows] == [1, 1, 2, 5, 14]
    assert all(int(r[2]) == 0 for r in rows)


def test_census_json_and_dump(tmp_path, capsys):
    dump = tmp_path / "spheres.pc"
    code, out, _ = run(["census", "-M", "7", "--json", "--out", str(dump)], capsys)
    assert code == 0
    rows = json.loads(out)
    assert rows[-1] == {"m": 7, "min_deg5": 0, "total": 5}
    Ks = read_planar_code(dump.read_bytes())
    assert len(Ks) == 1 + 1 + 2 + 5


def test_realize_tetrahedron(tmp_path, capsys):
    src = tmp_path / "t.txt"
    src.write_text(TETRA_TEXT)
    cert = tmp_path / "t.cert"
    log = tmp_path / "t.ops"
    code, out, _ = run(
        ["realize", str(src), "--out", str(cert), "--log", str(log)], capsys
    )
    assert code == 0
    assert "base=BASE-CP3" in out
    assert json.loads(cert.read_text())["m"] == 4
    assert log.read_text() == ""


def test_realize_icosahedron_base_atlas(tmp_path, capsys):
    src = tmp_path / "i.txt"
    src.write_text(write_text(icosahedron()))
    code, out, _ = run(["realize", str(src)], capsys)
    assert code == 0
    assert "base=ATLAS(5^12)" in out or "base=BASE-CP3" in out
    assert "complete=True" in out


def test_verify_good_and_tampered(tmp_path, capsys):
    src = tmp_path / "t.txt"
    src.write_text(TETRA_TEXT)
    cert = tmp_path / "t.cert"
    assert run(["realize", str(src), "--out", str(cert)], capsys)[0] == 0
    code, out, _ = run(["verify", str(cert)], capsys)
    assert code == 0 and "complete=True" in out

    doc = json.loads(cert.read_text())
    doc["vectors"][0] = [0, 0, 0]
    bad = tmp_path / "bad.cert"
    bad.write_text(json.dumps(doc))
    code, out, _ = run(["verify", str(bad)], capsys)
    assert code == 1

    mangled = tmp_path / "mangled.cert"
    mangled.write_text("{oops")
    assert run(["verify", str(mangled)], capsys)[0] == 2


def test_atlas_list_and_show(capsys):
    code, out, _ = run(["atlas", "list"], capsys)
    assert code == 0
    assert len(out.strip().splitlines()) == 22
    code, out, _ = run(["atlas", "show", "5^16 8^2"], capsys)
    assert code == 0
    assert "m: 18" in out and "star_k: 8" in out
    assert run(["atlas", "show", "nope"], capsys)[0] == 2


def test_atlas_verify_all(capsys):
    code, out, _ = run(["atlas", "verify-all"], capsys)
    assert code == 0
    assert out.count(" ok") == 22


def test_convert_roundtrip(tmp_path, capsys):
    src = tmp_path / "i.txt"
    src.write_text(write_text(icosahedron()))
    pc = tmp_path / "i.pc"
    back = tmp_path / "i2.txt"
    assert run(["convert", str(src), "--to", "planar_code", "--out", str(pc)], capsys)[0] == 0
    assert run(["convert", str(pc), "--to", "text", "--out", str(back)], capsys)[0] == 0
    K2 = validate([tuple(map(int, ln.split())) for ln in back.read_text().splitlines()[1:]])
    assert canonical_form(K2) == canonical_form(icosahedron())


def test_convert_certificate_drops_vectors(tmp_path, capsys):
    src = tmp_path / "t.txt"
    src.write_text(TETRA_TEXT)
    cert = tmp_path / "t.cert"
    run(["realize", str(src), "--out", str(cert)], capsys)
    out_txt = tmp_path / "t2.txt"
    code, _, err = run(["convert", str(cert), "--to", "text", "--out", str(out_txt)], capsys)
    assert code == 0
    assert "vectors dropped" in err
    assert out_txt.read_text().startswith("4\n")


def test_convert_bad_header(tmp_path, capsys):
    p = tmp_path / "junk.pc"
    p.write_bytes(b">>planar_kode<<" + bytes([4, 2, 3, 4, 0]))
    assert run(["convert", str(p), "--from", "planar_code", "--to", "text"], capsys)[0] == 2


def test_seed_determinism(tmp_path, capsys):
    src = tmp_path / "i.txt"
    src.write_text(write_text(icosahedron()))
    outs = []
    for _ in range(2):
        code, out, _ = run(["realize", str(src), "--json", "--seed", "5"], capsys)
        assert code == 0
        outs.append(out)
    assert outs[0] == outs[1]


def test_stdin_dash():
    proc = subprocess.run(
        [sys.executable, "-m", "fanweaver.cli", "validate", "-"],
        input=TETRA_TEXT.encode(),
        capture_output=True,
    )
    assert proc.returncode == 0
    assert b"m=4" in proc.stdout


def test_jobs_flag_stable_output(capsys):
    a = run(["census", "-M", "8", "--json"], capsys)
    b = run(["census", "-M", "8", "--json", "--jobs", "2"], capsys)
    assert a == b


def test_batch_realize_jobs_stable(tmp_path, capsys):
    from fanweaver.census import enumerate_spheres

    src = tmp_path / "batch.pc"
    src.write_bytes(write_planar_code(enumerate_spheres(7)))
    a = run(["realize", str(src), "--json"], capsys)
    b = run(["realize", str(src), "--json", "--jobs", "2"], capsys)
    assert a == b and a[0] == 0
