from retipy.profiler import enable_profiling, profile_report
from retipy.runtime.pipeline import Pipeline


def test_pipeline_creation():
    p = Pipeline()
    assert len(p) == 0
    assert p.names == []

def test_pipeline_add_step_chains():
    p = Pipeline()
    assert p.add_step("double", lambda x: 2 * x) is p
    assert len(p.steps) == 1

def test_pipeline_repr():
    p = Pipeline([("a", abs)])
    assert "Pipeline(steps=['a'])" in repr(p)

def test_pipeline_empty_pipeline_execution():
    data = object()
    assert Pipeline().run(data) is data

def test_pipeline_execution_order():
    pipeline = Pipeline()
    pipeline.add_step("append_a", lambda items: items + ["a"])
    pipeline.add_step("append_b", lambda items: items + ["b"])
    assert pipeline.run([]) == ["a", "b"]

def test_pipeline_stages_are_profiled():
    enable_profiling()
    Pipeline([("square", lambda x: x * x), ("negate", lambda x: -x)]).run(3)
    ops = profile_report(format="dict")["operations"]
    assert ops["square"]["count"] == 1
    assert ops["negate"]["count"] == 1
