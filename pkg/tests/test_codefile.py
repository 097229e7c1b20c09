import io

import pytest

from invgray.codefile import dumps_code, parse_header, read_code, read_table, write_code
from invgray.recursive_codes import gcd_code


def test_header_fields():
    assert parse_header(["# type=B n=4 algorithm=recursive", "1 2 3 4", "# note"]) == {
        "type": "B", "n": "4", "algorithm": "recursive"}


def test_round_trip_through_text(tmp_path):
    code = gcd_code(4)
    path = tmp_path / "d4.txt"
    write_code(code, path, algorithm="recursive")
    back, header = read_code(path)
    assert back == code
    assert header["algorithm"] == "recursive"
    assert dumps_code(code).splitlines()[1] == "1 2 3 4"


def test_read_code_without_header():
    code, header = read_code(io.StringIO("1 2\n\n-2 -1\n"), "D")
    assert header == {} and code.n == 2 and code.words == ((1, 2), (-2, -1))


def test_read_code_errors():
    with pytest.raises(ValueError, match="line 2"):
        read_code(io.StringIO("# type=A\n1 x\n"))
    with pytest.raises(ValueError, match="type"):
        read_code(io.StringIO("1 2\n"))


def test_table_is_lenient_on_whitespace():
    t = read_table(io.StringIO("# type=D n=2\n 1  2 |  -2 -1\n-1 -2|\n"))
    assert t.columns == [[(1, 2), (-1, -2)], [(-2, -1)]]
    assert t.entries()[2] == ((2, 1), (-2, -1))
    assert t.as_code().kind == "D"


def test_table_is_strict_on_values():
    with pytest.raises(ValueError, match="column 2"):
        read_table(io.StringIO("1 2 | 2 2\n"))
