import pytest
from hypothesis import given, strategies as st

from sulvageom.exact_numbers import rat
from sulvageom.scale_calculus import (
    Correspondence,
    LabelMismatch,
    NonPositiveFactor,
    NonPositiveParts,
    RelatedExceedsWhole,
    as_ratio,
    compose,
    derive_i59_trace,
    invert,
    make_correspondence,
    refine,
    removal_form,
    trace_to_dict,
)

parts = st.integers(min_value=1, max_value=10**4)
correspondences = st.builds(Correspondence, parts, parts)


class TestConstruction:
    def test_stored_verbatim(self):
        c = make_correspondence(24, 17, ("half-diagonal", "half-side"))
        assert (c.p, c.q) == (24, 17)

    def test_identity(self):
        c = make_correspondence(1, 1, ("x", "x"))
        assert (c.p, c.q) == (1, 1)

    def test_remove_two_of_fifteen(self):
        c = make_correspondence(15, 13, ("diameter", "side"))
        assert removal_form(c) == (15, 2)

    def test_never_reduced(self):
        assert Correspondence(232, 28) != Correspondence(58, 7)
        assert as_ratio(Correspondence(232, 28)) == as_ratio(Correspondence(58, 7))

    def test_nonpositive_parts(self):
        with pytest.raises(NonPositiveParts):
            make_correspondence(0, 3)


class TestOperations:
    def test_refine(self):
        assert refine(Correspondence(58, 7), 4) == Correspondence(232, 28)
        assert refine(Correspondence(24, 17), 1) == Correspondence(24, 17)
        assert refine(Correspondence(3, 2), 5) == Correspondence(15, 10)

    def test_refine_bad_factor(self):
        with pytest.raises(NonPositiveFactor):
            refine(Correspondence(3, 2), 0)

    def test_invert(self):
        c = Correspondence(58, 51, ("diameter", "side"))
        assert invert(c) == Correspondence(51, 58, ("side", "diameter"))
        fixed = invert(Correspondence(1, 1, ("x", "x")))
        assert fixed == Correspondence(1, 1, ("x", "x"))

    def test_compose(self):
        c1 = Correspondence(24, 17, ("A", "B"))
        c2 = Correspondence(17, 7, ("B", "C"))
        out = compose(c1, c2)
        assert (out.p, out.q, out.labels) == (408, 119, ("A", "C"))
        assert as_ratio(out) == rat(7, 24)

    def test_compose_identity(self):
        c = Correspondence(24, 17, ("A", "B"))
        out = compose(c, Correspondence(1, 1, ("B", "B")))
        assert (out.p, out.q) == (24, 17)

    def test_compose_label_mismatch(self):
        with pytest.raises(LabelMismatch):
            compose(Correspondence(2, 1, ("s", "half-s")), Correspondence(24, 17, ("half-diag", "half-s")))

    def test_as_ratio(self):
        assert as_ratio(Correspondence(232, 28)) == rat(7, 58)
        assert as_ratio(Correspondence(1, 1)) == rat(1)
        assert as_ratio(Correspondence(1393, 1224)) == rat(1224, 1393)

    def test_removal_form(self):
        assert removal_form(Correspondence(232, 204)) == (232, 28)
        assert removal_form(Correspondence(58, 51)) == (58, 7)
        assert removal_form(Correspondence(5, 5)) == (5, 0)

    def test_removal_form_overfull(self):
        with pytest.raises(RelatedExceedsWhole):
            removal_form(Correspondence(5, 6))


@given(c=correspondences, k=st.integers(min_value=1, max_value=100))
def test_refine_preserves_ratio(c, k):
    assert as_ratio(refine(c, k)) == as_ratio(c)


@given(c=correspondences)
def test_invert_involution_and_reciprocal(c):
    assert invert(invert(c)) == c
    assert as_ratio(invert(c)) == rat(1) / as_ratio(c)


@given(c1=correspondences, c2=correspondences)
def test_compose_ratio_product(c1, c2):
    c1 = Correspondence(c1.p, c1.q, ("A", "B"))
    c2 = Correspondence(c2.p, c2.q, ("B", "C"))
    assert as_ratio(compose(c1, c2)) == as_ratio(c1) * as_ratio(c2)


@given(c=correspondences.filter(lambda c: c.q <= c.p))
def test_removal_round_trip(c):
    whole, removed = removal_form(c)
    assert Correspondence(whole, whole - removed, c.labels) == c


class TestI59Trace:
    def test_step_count(self):
        assert len(derive_i59_trace().steps) == 7

    def test_scripted_correspondences(self):
        trace = derive_i59_trace()
        afters = [(s.after.p, s.after.q) for s in trace.steps]
        assert afters == [
            (12, 8),
            (24, 17),
            (24, 7),
            (51, 7),
            (58, 51),
            (58, 51),
            (232, 204),
        ]

    def test_final_and_removal(self):
        trace = derive_i59_trace()
        assert (trace.final.p, trace.final.q) == (232, 204)
        assert removal_form(trace.final) == (232, 28)
        assert trace.final.p == 8 * 29

    def test_final_ratio(self):
        trace = derive_i59_trace()
        assert as_ratio(trace.final) == rat(51, 58)
        assert as_ratio(trace.steps[5].after) == rat(51, 58)

    def test_intermediate_removal_reading(self):
        trace = derive_i59_trace()
        assert removal_form(trace.steps[5].after) == (58, 7)

    def test_ratio_constant_over_last_steps(self):
        trace = derive_i59_trace()
        ratios = {as_ratio(s.after) for s in trace.steps[4:]}
        assert ratios == {rat(51, 58)}

    def test_chain_links(self):
        trace = derive_i59_trace()
        assert trace.steps[0].before is None
        for prev, step in zip(trace.steps, trace.steps[1:]):
            assert step.before == prev.after

    def test_anchors_nonempty(self):
        assert all(s.anchor for s in derive_i59_trace().steps)


class TestTraceSerialization:
    def test_schema(self):
        doc = trace_to_dict(derive_i59_trace())
        assert list(doc.keys()) == ["steps", "final"]
        assert doc["final"] == [232, 204]
        assert len(doc["steps"]) == 7
        first = doc["steps"][0]
        assert list(first.keys()) == ["description", "before", "after", "anchor"]
        assert first["before"] is None
        assert doc["steps"][-1]["after"] == [232, 204]
