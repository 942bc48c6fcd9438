import itertools

from hypothesis import given, settings, strategies as st

from qstar import (
    Transformation,
    compose,
    idempotents_Q,
    image,
    in_Q,
    in_TE,
    in_TEstar,
    in_TEstar_pairwise,
    is_cross_section,
    kernel_partition,
    make_partitioned_set,
)


@st.composite
def partitions(draw, max_n=5):
    n = draw(st.integers(min_value=1, max_value=max_n))
    labels = draw(st.lists(st.integers(min_value=0, max_value=n - 1), min_size=n, max_size=n))
    blocks = {}
    for x, lab in enumerate(labels):
        blocks.setdefault(lab, []).append(x)
    return make_partitioned_set(n, list(blocks.values()))


def maps(n):
    return st.lists(
        st.integers(min_value=0, max_value=n - 1), min_size=n, max_size=n
    ).map(lambda xs: Transformation(tuple(xs)))


@st.composite
def partition_and_map(draw):
    P = draw(partitions())
    a = draw(maps(P.n))
    return P, a


@settings(max_examples=50, deadline=None)
@given(st.integers(min_value=1, max_value=5), st.data())
def test_composition_is_associative(n, data):
    a = data.draw(maps(n))
    b = data.draw(maps(n))
    c = data.draw(maps(n))
    assert compose(compose(a, b), c) == compose(a, compose(b, c))


@settings(max_examples=50, deadline=None)
@given(st.integers(min_value=1, max_value=6), st.data())
def test_kernel_classes_count_equals_image_size(n, data):
    a = data.draw(maps(n))
    assert len(kernel_partition(a).classes) == len(image(a))


@settings(max_examples=50, deadline=None)
@given(st.integers(min_value=1, max_value=5), st.data())
def test_image_of_product_inside_image_of_right_factor(n, data):
    a = data.draw(maps(n))
    b = data.draw(maps(n))
    assert image(compose(a, b)) <= image(b)


@settings(max_examples=50, deadline=None)
@given(partition_and_map())
def test_membership_chain(pm):
    P, a = pm
    if in_Q(P, a):
        assert in_TEstar(P, a)
    if in_TEstar(P, a):
        assert in_TE(P, a)
    assert in_TEstar(P, a) == in_TEstar_pairwise(P, a)


@settings(max_examples=50, deadline=None)
@given(partitions())
def test_cross_section_count_is_m(P):
    count = sum(
        1
        for r in range(P.n + 1)
        for sub in itertools.combinations(range(P.n), r)
        if is_cross_section(P, sub)
    )
    assert count == P.m


@settings(max_examples=50, deadline=None)
@given(partitions(), st.data())
def test_idempotents_form_right_zero_band(P, data):
    idems = idempotents_Q(P)
    f = data.draw(st.sampled_from(idems))
    g = data.draw(st.sampled_from(idems))
    assert compose(f, g) == g
    assert in_Q(P, compose(f, g))
