import pytest

from fullcycle.corpus.reports import read_csv_rows
from fullcycle.exceptions import ConfigurationError, OracleLimitError
from fullcycle.proof import oracle_check, verify_corpus, verify_instance


def test_verify_dodecahedron(dodecahedron):
    report = verify_instance(dodecahedron)
    row = report.row
    assert not report.failed
    assert row.length == 20
    assert row.optimal
    assert row.w == 0
    assert row.p3_ok and row.pentagon_ok and row.two_white_ok
    assert row.conserved
    assert row.bound == 16
    assert row.bound_ok
    assert report.detail["bound"]["theorem_bound"] == 16
    assert report.detail["witness_moves"] == []


def test_verify_with_forbidden_is_not_a_claim(dodecahedron):
    report = verify_instance(dodecahedron, forbidden={0, 1})
    assert report.row.length == 17
    assert report.row.w == 3
    assert report.detail["bound"] is None
    assert not report.detail["audit"]["longest_claim"]
    assert not report.failed


def test_verify_rejects_bad_arguments(dodecahedron):
    with pytest.raises(ConfigurationError):
        verify_instance(dodecahedron, radius=4)
    with pytest.raises(ConfigurationError):
        verify_instance(dodecahedron, forbidden={25})


def test_corpus_keeps_input_order(dodecahedron, c30):
    report = verify_corpus([c30, dodecahedron], workers=2)
    assert [row.graph_id for row in report.rows] == [c30.name, dodecahedron.name]
    assert report.ok


def test_report_files_agree(tmp_path, dodecahedron, c30):
    report = verify_corpus([dodecahedron, c30])
    json_path, csv_path = report.write(str(tmp_path / "run"))
    assert json_path.name == "run.json"
    assert csv_path.name == "run.csv"

    rows = report.to_dict()["rows"]
    csv_rows = read_csv_rows(csv_path)
    assert len(csv_rows) == len(rows) == 2
    for js, cs in zip(rows, csv_rows):
        for key, value in js.items():
            if isinstance(value, bool):
                assert cs[key] == ("true" if value else "false")
            elif isinstance(value, float):
                assert float(cs[key]) == value
            else:
                assert cs[key] == str(value)


def test_oracle_check_passes(dodecahedron):
    report = oracle_check([dodecahedron], each_vertex=True)
    assert report.passed
    assert report.comparisons == 21


def test_oracle_check_every_vertex_c30(c30):
    report = oracle_check([c30], each_vertex=True)
    assert report.comparisons == 31
    assert report.discrepancies == []
    assert report.passed


def test_oracle_check_catches_fault(dodecahedron):
    report = oracle_check([dodecahedron], inject_fault=True)
    assert not report.passed
    d = report.discrepancies[0]
    assert d.exact_length == 19
    assert d.oracle_length == 20
    assert d.problems


def test_oracle_check_limit(buckyball):
    with pytest.raises(OracleLimitError):
        oracle_check([buckyball])
