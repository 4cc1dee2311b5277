import json
import random
import subprocess

import pytest
from hypothesis import given, settings, strategies as st

from viforge.cli import EXIT_NO, EXIT_PRECONDITION, EXIT_USAGE, EXIT_YES, run
from viforge.graphs import Graph
from viforge.oracles import oracle_imbalance
from viforge.instances import (
    GraphInstance,
    ParseError,
    PartitionInstance,
    generate,
    instance_sha256,
    parse,
    parse_text,
    serialize,
)
from viforge.integrity import vertex_cover_min, vertex_integrity
from viforge.reductions import BinPackingInstance, ThreeDMInstance


class TestParsing:
    def test_basic_graph(self):
        inst = parse_text("p 2 1\ne 0 1\n")
        assert inst.graph.edges == {(0, 1)}
        assert inst.graph.n == 2

    def test_comments_and_blank_lines(self):
        inst = parse_text("# header comment\np 3 2\n\ne 0 1  # inline\ne 1 2\n")
        assert inst.graph.m == 2

    def test_attributes(self):
        text = (
            "p 3 2\ne 0 1 4\ne 1 2 2\nc 0 1\nc 1 2\nc 2 1\n"
            "col 1 7\ncol 0 7\ncol 2 0\npc 0 1\nt 0 0\nt 0 2\nm 7 2\n"
        )
        inst = parse_text(text)
        g = inst.graph
        assert g.weights == {(0, 1): 4, (1, 2): 2}
        assert g.capacities == {0: 1, 1: 2, 2: 1}
        assert g.colors == {0: 7, 1: 7, 2: 0}
        assert inst.precolor == {0: 1}
        assert inst.terminals == ((0, 2),)
        assert inst.motif == {7: 2}

    def test_numeric_kinds(self):
        bp = parse_text("bp 3 4\na 1\na 1\na 2\na 2\n")
        assert bp == BinPackingInstance((1, 1, 2, 2), 3)
        pt = parse_text("pt 2\na 3\na 3\n")
        assert pt == PartitionInstance((3, 3))
        dm = parse_text("dm 2 2\ntr 0 0 0\ntr 1 1 1\n")
        assert dm == ThreeDMInstance(2, ((0, 0, 0), (1, 1, 1)))

    def test_error_lines(self):
        with pytest.raises(ParseError) as e:
            parse_text("p 2 1\ne 0 0\n")
        assert e.value.line == 2
        assert "line 2" in str(e.value)
        with pytest.raises(ParseError) as e:
            parse_text("p 2 2\ne 0 1\ne 1 0\n")
        assert e.value.line == 3

    def test_structural_errors(self):
        bad = [
            "e 0 1\n",                      # edge before header
            "p 2 1\np 2 1\ne 0 1\n",        # duplicate header
            "p 2 1\ne 0 5\n",               # vertex out of range
            "p 2 1\ne 0\n",                 # wrong arity
            "p 2 2\ne 0 1\n",               # edge count mismatch
            "p 3 2\ne 0 1 4\ne 1 2\n",      # weights must be all or none
            "p 2 1\ne 0 1 0\n",             # weight must be positive
            "p 2 1\ne 0 1\nq 1\n",          # unknown tag
            "p 2 1\ne 0 1\nc 0 0\nc 1 1\n",  # capacity must be positive
            "p 2 1\ne 0 1\npc 0 1\npc 0 2\n",  # duplicate precolor
            "p 3 2\ne 0 1\ne 1 2\nt 1 0\n",    # set ids must start at 0
            "p 2 1\ne 0 1\nm 0 -1\n",       # negative motif count
            "bp 2 2\na 1\n",                # missing item line
            "dm 1 1\ntr 0 0 9\n",           # coordinate out of range
        ]
        for text in bad:
            with pytest.raises(ParseError):
                parse_text(text)

    def test_parse_reads_files(self, tmp_path):
        path = tmp_path / "inst.g"
        path.write_text("p 2 1\ne 0 1\n")
        assert parse(path).graph.m == 1


class TestSerialization:
    def test_round_trip_frozen(self):
        insts = [
            GraphInstance(Graph(3, {(0, 1), (1, 2)},
                                capacities={0: 1, 1: 2, 2: 1},
                                colors={0: 0, 1: 1, 2: 0},
                                weights={(0, 1): 3, (1, 2): 1}),
                          precolor={0: 1}, terminals=((0, 2),), motif={0: 2}),
            GraphInstance(Graph(0)),
            BinPackingInstance((1, 2, 3), 2),
            PartitionInstance((5, 5)),
            ThreeDMInstance(2, ((0, 0, 0), (1, 1, 1))),
            ThreeDMInstance(0, ()),
        ]
        for inst in insts:
            assert parse_text(serialize(inst)) == inst

    def test_serialize_is_canonical(self):
        a = GraphInstance(Graph(3, {(1, 2), (0, 1)}))
        b = GraphInstance(Graph(3, {(0, 1), (1, 2)}))
        assert serialize(a) == serialize(b)
        assert instance_sha256(a) == instance_sha256(b)

    @given(st.integers(0, 10_000))
    @settings(max_examples=40, deadline=None)
    def test_round_trip_generated(self, seed):
        rng = random.Random(seed)
        kind = rng.choice(["random-vi", "random-vc", "reduction-source"])
        params = {}
        if kind == "reduction-source":
            params["source"] = rng.choice(["bp", "pt", "dm"])
        else:
            params["n"] = rng.randint(1, 10)
            params["colors"] = rng.choice([0, 3])
            params["weights"] = rng.random() < 0.4
            params["caps"] = rng.random() < 0.4
        text = generate(kind, seed=seed, **params)
        inst = parse_text(text)
        assert serialize(inst) == text


class TestGeneration:
    def test_deterministic(self):
        a = generate("random-vi", seed=7, n=9, k=3)
        b = generate("random-vi", seed=7, n=9, k=3)
        assert a == b
        assert a != generate("random-vi", seed=8, n=9, k=3)

    def test_vi_bound_holds(self):
        for seed in range(12):
            inst = parse_text(generate("random-vi", seed=seed, n=8, k=3))
            assert vertex_integrity(inst.graph)[0] <= 3

    def test_vc_bound_holds(self):
        for seed in range(12):
            inst = parse_text(generate("random-vc", seed=seed, n=8, k=2))
            assert len(vertex_cover_min(inst.graph)) <= 2

    def test_sources_meet_preconditions(self):
        for seed in range(8):
            bp = parse_text(generate("reduction-source", seed=seed, source="bp"))
            assert isinstance(bp, BinPackingInstance)
            assert bp.t >= 3 and bp.total % bp.t == 0
            assert all(a < bp.total // bp.t for a in bp.items)
            pt = parse_text(generate("reduction-source", seed=seed, source="pt"))
            assert len(pt.items) % 2 == 0 and len(pt.items) >= 10
            assert sum(pt.items) % 2 == 0
            dm = parse_text(generate("reduction-source", seed=seed, source="dm"))
            assert isinstance(dm, ThreeDMInstance)

    def test_unknown_kind(self):
        with pytest.raises(ValueError):
            generate("nope")


def _write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


@pytest.fixture
def k2(tmp_path):
    return _write(tmp_path, "k2.g", "p 2 1\ne 0 1\n")


@pytest.fixture
def p4(tmp_path):
    return _write(tmp_path, "p4.g", "p 4 3\ne 0 1\ne 1 2\ne 2 3\n")


@pytest.fixture
def star(tmp_path):
    return _write(tmp_path, "star.g", "p 4 3\ne 0 1\ne 0 2\ne 0 3\n")


class TestCliSolve:
    def test_plain_and_json(self, k2, capsys):
        assert run(["solve", "imbalance", k2]) == EXIT_YES
        capsys.readouterr()
        assert run(["solve", "imbalance", k2, "--json"]) == EXIT_YES
        rec = json.loads(capsys.readouterr().out)
        assert rec["problem"] == "imbalance"
        assert rec["answer"] is True and rec["value"] == 2
        assert rec["certificate"] == {"ordering": [0, 1]}
        assert rec["parameters"]["vi"] == 2 and rec["parameters"]["vc"] == 1
        assert isinstance(rec["wall_time_s"], float)
        assert len(rec["instance_sha256"]) == 64

    def test_decision_problems(self, star, capsys):
        assert run(["solve", "eqcol", star, "--r", "2"]) == EXIT_NO
        assert run(["solve", "eqcol", star, "--r", "4"]) == EXIT_YES
        assert run(["solve", "ecp", star, "--r", "2"]) == EXIT_NO
        capsys.readouterr()

    def test_color_agnostic_problems_accept_colored_files(self, tmp_path,
                                                          capsys):
        path = tmp_path / "colored.g"
        path.write_text(generate("random-vi", seed=3, n=7, k=3, colors=3))
        assert run(["solve", "imbalance", str(path), "--json"]) == EXIT_YES
        rec = json.loads(capsys.readouterr().out)
        g = parse_text(path.read_text()).graph
        bare = Graph(g.n, set(g.edges))
        assert rec["value"] == oracle_imbalance(bare)[0]

    def test_missing_r_is_usage_error(self, star, capsys):
        assert run(["solve", "eqcol", star]) == EXIT_USAGE
        assert run(["solve", "mmoo", star]) == EXIT_USAGE
        capsys.readouterr()

    def test_two_graph_problems(self, k2, p4, capsys):
        assert run(["solve", "mcs", k2]) == EXIT_USAGE
        assert run(["solve", "mcs", k2, p4, "--json"]) == EXIT_YES
        rec = json.loads(capsys.readouterr().out.strip().splitlines()[-1])
        assert rec["value"] == 1
        assert isinstance(rec["instance_sha256"], list)

    def test_missing_attributes_are_precondition_errors(self, p4, capsys):
        assert run(["solve", "cvc", p4]) == EXIT_PRECONDITION
        assert run(["solve", "mmoo", p4, "--r", "1"]) == EXIT_PRECONDITION
        capsys.readouterr()

    def test_parse_failures_are_usage_errors(self, tmp_path, capsys):
        bad = _write(tmp_path, "bad.g", "p 2 1\ne 0 0\n")
        assert run(["solve", "imbalance", bad]) == EXIT_USAGE
        assert run(["solve", "imbalance", str(tmp_path / "missing.g")]) == EXIT_USAGE
        capsys.readouterr()

    def test_wrong_instance_kind(self, tmp_path, capsys):
        bp = _write(tmp_path, "src.bp", "bp 3 6\na 1\na 1\na 1\na 1\na 1\na 1\n")
        assert run(["solve", "imbalance", bp]) == EXIT_USAGE
        capsys.readouterr()

    def test_weighted_problems(self, tmp_path, capsys):
        heavy = _write(tmp_path, "heavy.g", "p 2 1\ne 0 1 5\n")
        assert run(["solve", "mmoo", heavy, "--r", "4"]) == EXIT_NO
        assert run(["solve", "mmoo", heavy, "--r", "5"]) == EXIT_YES
        sf = _write(tmp_path, "sf.g",
                    "p 3 3\ne 0 1 3\ne 0 2 1\ne 1 2 1\nt 0 0\nt 0 1\n")
        assert run(["solve", "sf", sf, "--json"]) == EXIT_YES
        rec = json.loads(capsys.readouterr().out.strip().splitlines()[-1])
        assert rec["value"] == 2
        assert rec["certificate"]["edges"] == [[0, 2], [1, 2]]


class TestCliOracle:
    def test_parameter_oracles(self, p4, capsys):
        assert run(["oracle", "vi", p4, "--json"]) == EXIT_YES
        rec = json.loads(capsys.readouterr().out)
        assert rec["value"] == 3
        assert run(["oracle", "td", p4, "--json"]) == EXIT_YES
        rec = json.loads(capsys.readouterr().out)
        assert rec["value"] == 3
        assert run(["oracle", "vc", p4, "--json"]) == EXIT_YES
        rec = json.loads(capsys.readouterr().out)
        assert rec["value"] == 2

    def test_numeric_oracles(self, tmp_path, capsys):
        bp = _write(tmp_path, "src.bp", "bp 3 6\na 1\na 1\na 1\na 1\na 1\na 1\n")
        assert run(["oracle", "bp", bp]) == EXIT_YES
        bad = _write(tmp_path, "odd.bp", "bp 2 3\na 1\na 1\na 1\n")
        assert run(["oracle", "bp", bad]) == EXIT_NO
        pt = _write(tmp_path, "even.pt", "pt 4\na 1\na 1\na 1\na 3\n")
        assert run(["oracle", "partition", pt]) == EXIT_YES
        assert run(["oracle", "partition", pt, "--balanced"]) == EXIT_NO
        dm = _write(tmp_path, "m.dm", "dm 1 1\ntr 0 0 0\n")
        assert run(["oracle", "3dm", dm]) == EXIT_YES
        capsys.readouterr()

    def test_solver_and_oracle_agree(self, star, capsys):
        assert run(["solve", "imbalance", star, "--json"]) == EXIT_YES
        a = json.loads(capsys.readouterr().out)
        assert run(["oracle", "imbalance", star, "--json"]) == EXIT_YES
        b = json.loads(capsys.readouterr().out)
        assert a["value"] == b["value"] == 4

    def test_budget_exceeded_is_precondition(self, tmp_path, capsys):
        lines = [f"e {i} {i + 1}" for i in range(9)]
        big = _write(tmp_path, "p10.g", "p 10 9\n" + "\n".join(lines) + "\n")
        assert run(["oracle", "vi", big]) == EXIT_PRECONDITION
        capsys.readouterr()


class TestCliReduce:
    def test_unary_mmoo_round_trip(self, tmp_path, capsys, monkeypatch):
        src = _write(tmp_path, "src.bp", "bp 3 6\na 1\na 1\na 1\na 1\na 1\na 1\n")
        out = str(tmp_path / "built.g")
        meta_path = str(tmp_path / "meta.json")
        assert run(["reduce", "unary-mmoo", src, "-o", out, "--meta", meta_path]) == EXIT_YES
        capsys.readouterr()
        meta = json.loads(open(meta_path).read())
        assert meta["r"] == 4
        assert len(meta["instance_sha256"]) == 64
        inst = parse(out)
        assert instance_sha256(inst) == meta["instance_sha256"]
        # the built gadget is past the default enumeration budget
        assert run(["oracle", "mmoo", out, "--r", str(meta["r"])]) == EXIT_PRECONDITION
        monkeypatch.setenv("VIFORGE_ORACLE_MAX_EDGES", "31")
        assert run(["oracle", "mmoo", out, "--r", str(meta["r"])]) == EXIT_YES
        capsys.readouterr()

    def test_reduce_to_stdout(self, tmp_path, capsys):
        src = _write(tmp_path, "m.dm", "dm 1 1\ntr 0 0 0\n")
        assert run(["reduce", "colorful-motif", src]) == EXIT_YES
        text = capsys.readouterr().out
        inst = parse_text(text)
        assert inst.motif == {0: 1, 1: 1, 2: 1, 3: 1}
        assert run(["solve", "motif",
                    _write(tmp_path, "built.g", text)]) == EXIT_YES
        capsys.readouterr()

    def test_bandwidth_reduce(self, tmp_path, capsys):
        src = _write(tmp_path, "t.bp", "bp 2 2\na 1\na 1\n")
        out = str(tmp_path / "tree.g")
        meta_path = str(tmp_path / "meta.json")
        assert run(["reduce", "bandwidth", src, "-o", out, "--meta", meta_path]) == EXIT_YES
        meta = json.loads(open(meta_path).read())
        assert meta["width"] == 29 and meta["n_vertices"] == 233
        assert parse(out).graph.n == 233
        capsys.readouterr()

    def test_wrong_source_kind(self, tmp_path, capsys):
        pt = _write(tmp_path, "x.pt", "pt 10\n" + "a 1\n" * 10)
        assert run(["reduce", "unary-mmoo", pt]) == EXIT_USAGE
        assert run(["reduce", "binary-mmoo", pt]) == EXIT_YES
        capsys.readouterr()

    def test_precondition_failures(self, tmp_path, capsys):
        src = _write(tmp_path, "full.bp",
                     "bp 5 8\na 1\na 1\na 1\na 1\na 1\na 1\na 2\na 2\n")
        assert run(["reduce", "unary-mmoo", src]) == EXIT_PRECONDITION
        assert run(["reduce", "unary-mmoo", src, "--drop-equal-items"]) == EXIT_YES
        trivial = _write(tmp_path, "trivial.bp", "bp 3 4\na 1\na 1\na 2\na 2\n")
        assert run(["reduce", "unary-mmoo", trivial,
                    "--drop-equal-items"]) == EXIT_PRECONDITION
        capsys.readouterr()


class TestCliGenParams:
    def test_gen_deterministic(self, tmp_path, capsys):
        a = str(tmp_path / "a.g")
        b = str(tmp_path / "b.g")
        assert run(["gen", "random-vi", "--seed", "5", "--n", "9", "--k", "3",
                    "-o", a]) == EXIT_YES
        assert run(["gen", "random-vi", "--seed", "5", "--n", "9", "--k", "3",
                    "-o", b]) == EXIT_YES
        assert open(a).read() == open(b).read()
        capsys.readouterr()

    def test_gen_to_stdout_parses(self, capsys):
        assert run(["gen", "reduction-source", "--source", "pt", "--seed", "3"]) == EXIT_YES
        text = capsys.readouterr().out
        assert isinstance(parse_text(text), PartitionInstance)

    def test_params_output(self, p4, capsys):
        assert run(["params", p4]) == EXIT_YES
        rec = json.loads(capsys.readouterr().out)
        assert rec["n"] == 4 and rec["m"] == 3
        assert rec["vi"] == 3 and rec["vc"] == 2
        assert sum(t["count"] for t in rec["types"]) == 2
        assert rec["separator"] is not None


class TestCliVerify:
    def test_accepts_solver_records(self, k2, tmp_path, capsys):
        assert run(["solve", "imbalance", k2, "--json"]) == EXIT_YES
        rec_path = _write(tmp_path, "rec.json", capsys.readouterr().out)
        assert run(["verify", "imbalance", k2, rec_path]) == EXIT_YES
        capsys.readouterr()

    def test_rejects_tampered_value(self, k2, tmp_path, capsys):
        assert run(["solve", "imbalance", k2, "--json"]) == EXIT_YES
        rec = json.loads(capsys.readouterr().out)
        rec["value"] = 7
        rec_path = _write(tmp_path, "bad.json", json.dumps(rec))
        assert run(["verify", "imbalance", k2, rec_path]) == EXIT_NO
        capsys.readouterr()

    def test_bare_certificate(self, star, tmp_path, capsys):
        assert run(["solve", "ecp", star, "--r", "4", "--json"]) == EXIT_YES
        rec = json.loads(capsys.readouterr().out)
        cert_path = _write(tmp_path, "cert.json", json.dumps(rec["certificate"]))
        assert run(["verify", "ecp", star, cert_path, "--r", "4"]) == EXIT_YES
        capsys.readouterr()

    def test_malformed_certificate(self, k2, tmp_path, capsys):
        rec_path = _write(tmp_path, "junk.json", "{\"certificate\": 5}")
        assert run(["verify", "imbalance", k2, rec_path]) == EXIT_NO
        capsys.readouterr()


class TestCliParallel:
    def test_threads_match_sequential(self, tmp_path, capsys):
        files = []
        for seed in range(4):
            text = generate("random-vi", seed=seed, n=7, k=3)
            files.append(_write(tmp_path, f"g{seed}.g", text))
        assert run(["solve", "imbalance", *files, "--json"]) == EXIT_YES
        seq = capsys.readouterr().out.strip().splitlines()
        assert run(["solve", "imbalance", *files, "--json", "--threads", "3"]) == EXIT_YES
        par = capsys.readouterr().out.strip().splitlines()
        strip = lambda line: {k: v for k, v in json.loads(line).items()
                              if k != "wall_time_s"}
        assert [strip(x) for x in seq] == [strip(x) for x in par]

    def test_exit_code_is_worst_of_batch(self, star, tmp_path, capsys):
        bad = _write(tmp_path, "bad.g", "p 2 1\ne 0 0\n")
        assert run(["solve", "eqcol", star, bad, "--r", "4",
                    "--threads", "2"]) == EXIT_USAGE
        capsys.readouterr()


def test_console_script_runs(k2):
    got = subprocess.run(["viforge", "solve", "imbalance", k2, "--json"],
                         capture_output=True, text=True)
    assert got.returncode == 0
    assert json.loads(got.stdout)["value"] == 2
