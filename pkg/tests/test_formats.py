import pytest

from bracekit.constructions import zero_brace
from bracekit.core import validate
from bracekit.enumeration import all_skew_braces
from bracekit.errors import ParseError, ValidationError
from bracekit.formats import (
    ResultRecord,
    load_braces,
    parse_sbrace,
    parse_sbrace_records,
    write_sbrace,
    write_sbrace_records,
)


def test_order_one():
    A = validate(parse_sbrace("1\n0\n\n0\n"))
    assert A == zero_brace()


def test_roundtrip(B4):
    assert validate(parse_sbrace(write_sbrace(B4))) == B4
    for A in all_skew_braces(8):
        assert validate(parse_sbrace(write_sbrace(A))) == A


def test_multi_record(tmp_path):
    braces = list(all_skew_braces(4))
    path = tmp_path / "four.sbrace"
    path.write_text(write_sbrace_records(braces))
    assert load_braces(path) == braces
    names = [name for _, name in parse_sbrace_records(path.read_text())]
    assert names == [B.name for B in braces]


def test_comments_and_names():
    text = "# header comment\n2 Z2  # trailing\n0 1\n1 0\n\n0 1\n1 0\n"
    (pair, name), = parse_sbrace_records(text)
    assert name == "Z2" and pair.n == 2


@pytest.mark.parametrize("text, line", [
    ("2\n0 1\n1\n\n0 1\n1 0\n", 3),            # short row
    ("2\n0 1\n1 0\n0 1\n1 0\n", 4),             # no blank line between tables
    ("2\n0 1\n1 0\n\n0 1\n", 5),                # missing circ row
    ("x\n0\n\n0\n", 1),                         # bad header
    ("2\n0 1\n1 2\n\n0 1\n1 0\n", 3),           # out of range
    ("2\n0 a\n1 0\n\n0 1\n1 0\n", 2),           # not an integer
])
def test_parse_errors(text, line):
    with pytest.raises(ParseError) as exc:
        parse_sbrace(text)
    assert exc.value.line == line


def test_validation_is_delegated():
    with pytest.raises(ValidationError):
        validate(parse_sbrace("2\n0 0\n0 0\n\n0 1\n1 0\n"))


def test_result_record_roundtrip():
    r = ResultRecord("o4-abc", "huq.equals_ab_commutator", "FAIL", ([0, 2], "x\ty"), 1.25)
    line = r.to_line()
    assert line.count("\t") == 4 and "\n" not in line
    back = ResultRecord.from_line(line)
    assert (back.subject, back.check, back.verdict, back.time_ms) == ("o4-abc", r.check, "FAIL", 1.2)
    assert ResultRecord.from_line(ResultRecord("s", "c", "PASS").to_line()).witness is None
