"""Encoding sequences, decoding, and transport between bases."""

import pytest

from euleradic import (
    DecodeError,
    EncodingSequence,
    EncodingSymbol,
    LabelScheme,
    Vertex,
    count_good_dp,
    decode,
    encode,
    enumerate_paths,
    format_code,
    is_good,
    parse_code,
    transport,
    unmarked_counts,
)


def _scheme(p, q):
    return LabelScheme(Vertex(p, q))


def _code(level, *tokens):
    return EncodingSequence(level, tuple(
        EncodingSymbol(t[0], int(t[1:])) for t in tokens))


def _path(base, steps):
    from euleradic import EulerPath, Step
    return EulerPath(Vertex(*base), tuple(Step(d, k) for d, k in steps))


def test_encode_examples():
    s = _scheme(0, 0)
    assert encode(s, _path((0, 0), [("H", 1), ("V", 2)])) == _code(0, "s1", "v1")
    assert encode(s, _path((0, 0), [("V", 1), ("H", 2)])) == _code(0, "s2", "h1")
    assert encode(s, _path((0, 0), [("H", 1), ("V", 1)])) == _code(0, "s1", "s2")
    s11 = _scheme(1, 1)
    assert encode(s11, _path((1, 1), [("H", 1), ("V", 2), ("H", 3)])) \
        == _code(2, "s1", "s4", "h2")


def test_encode_rejects_wrong_start():
    with pytest.raises(ValueError):
        encode(_scheme(0, 0), _path((1, 0), [("H", 1)]))


def test_unmarked_counts_examples():
    s = _scheme(0, 0)
    path = _path((0, 0), [("H", 1), ("V", 2)])
    assert unmarked_counts(s, path, 0) == (0, 0)
    assert unmarked_counts(s, _path((0, 0), [("H", 1)]), 1) == (1, 1)
    assert unmarked_counts(s, path, 2) == (2, 1)


def test_unmarked_counts_follow_step_recursion():
    # marked step raises both counters by one; an unmarked step raises
    # only the opposite direction's counter
    for base in [(0, 0), (1, 0), (1, 1), (2, 1)]:
        scheme = _scheme(*base)
        for off in [(2, 2), (3, 1), (1, 3)]:
            for path in enumerate_paths(base, off):
                code = encode(scheme, path)
                h, v = unmarked_counts(scheme, path, 0)
                assert (h, v) == (0, 0)
                for m, sym in enumerate(code.symbols, start=1):
                    if sym.kind == "s":
                        h, v = h + 1, v + 1
                    elif sym.kind == "h":
                        v = v + 1
                    else:
                        h = h + 1
                    assert unmarked_counts(scheme, path, m) == (h, v)


def test_decode_inverts_encode():
    for base in [(0, 0), (1, 0), (0, 1), (1, 1), (2, 2)]:
        scheme = _scheme(*base)
        for off in [(0, 0), (1, 2), (2, 2), (3, 1)]:
            for path in enumerate_paths(base, off):
                assert decode(scheme, encode(scheme, path)) == path


def test_decode_examples_and_errors():
    s = _scheme(0, 0)
    assert decode(s, _code(0, "s1", "v1")) == _path((0, 0), [("H", 1), ("V", 2)])
    with pytest.raises(DecodeError):
        decode(s, _code(0, "h1"))
    with pytest.raises(DecodeError):
        decode(s, _code(0, "s1", "s1"))
    with pytest.raises(DecodeError):
        decode(s, _code(0, "s3"))
    with pytest.raises(ValueError):
        decode(s, _code(1, "s1"))


def test_transport_is_bijection_level_one():
    src, dst = _scheme(1, 0), _scheme(0, 1)
    goods = [x for x in enumerate_paths((1, 0), (2, 3))
             if is_good(src, x)[0]]
    assert len(goods) == count_good_dp((1, 0), (2, 3))
    image = set()
    for x in goods:
        y = transport(src, dst, x)
        assert y.end() == Vertex(3, 3)
        assert is_good(dst, y)[0]
        assert transport(dst, src, y) == x
        image.add(y)
    assert len(image) == count_good_dp((0, 1), (3, 2))


def test_transport_identity_same_base():
    s = _scheme(1, 1)
    for x in enumerate_paths((1, 1), (2, 2)):
        assert transport(s, s, x) == x


def test_transport_composes():
    a, b, c = _scheme(2, 0), _scheme(1, 1), _scheme(0, 2)
    for x in enumerate_paths((2, 0), (2, 4)):
        if not is_good(a, x)[0]:
            continue
        via = transport(b, c, transport(a, b, x))
        assert via == transport(a, c, x)


def test_transport_requires_equal_levels():
    with pytest.raises(ValueError):
        transport(_scheme(0, 0), _scheme(1, 0),
                  _path((0, 0), [("H", 1), ("V", 1)]))


def test_code_text_round_trip():
    code = _code(2, "s1", "s4", "h2", "v1")
    assert format_code(code) == "n=2;s1,s4,h2,v1"
    assert parse_code("n=2;s1,s4,h2,v1") == code
    assert parse_code(format_code(_code(0))) == _code(0)


@pytest.mark.parametrize("bad", [
    "s1,v1",
    "n=2 s1",
    "n=-1;s1",
    "n=2;x1",
    "n=2;s0",
    "n=2;s1,s1",
    "n=2;s1,,v1",
])
def test_parse_code_rejects_malformed_text(bad):
    with pytest.raises(ValueError):
        parse_code(bad)
