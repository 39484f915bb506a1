use pyo3::prelude::*;
use pyo3::types::{PyDict, PyModule};

/// Runs `code` with the module importable as `quiverfin_py`.
fn run_python(code: &std::ffi::CStr) {
    Python::initialize();
    Python::attach(|py| {
        let m = PyModule::new(py, "quiverfin_py").unwrap();
        quiverfin_py::register(&m).unwrap();
        py.import("sys").unwrap().getattr("modules").unwrap().set_item("quiverfin_py", &m).unwrap();
        let globals = PyDict::new(py);
        if let Err(e) = py.run(code, Some(&globals), None) {
            e.print(py);
            panic!("python code failed");
        }
    });
}

#[test]
fn classify_from_python() {
    run_python(
        c"
import quiverfin_py as qf
k = qf.Setting.parse('vertices: a b\\narrow: a b\\narrow: a b\\ndim: a=1 b=1\\n')
v = k.classify(checked=True)
assert v.is_infinite
assert v.witness.kind == 'A~1' and v.witness.multiplier == 1
assert v.witness.vertices == [('a', 'c0', 1), ('b', 'c1', 1)]
assert v.report.startswith('INFINITE\\nWITNESS type=A~1 m=1\\n')
assert k.verify_witness(v.witness.report)
assert not k.verify_witness(v.witness.report.replace('m=1', 'm=2'))
assert k.tits_form() == 0 and k.subroot() == [1, 1]
assert k.is_minimal_infinite()
assert [k.count_orbits(p) for p in (2, 3, 5)] == [4, 5, 7]
assert qf.Setting.parse(k.serialize()) == k

a3 = qf.Setting(['x', 'y', 'z'], [('x', 'y'), ('z', 'y')], [1, 2, 1])
assert not a3.classify().is_infinite and a3.witness() is None and a3.subroot() is None
assert a3.arrows == [('x', 'y'), ('z', 'y')] and a3.dim == [1, 2, 1]
",
    );
}

#[test]
fn algebras_from_python() {
    run_python(
        c"
import quiverfin_py as qf
alg = qf.Algebra([2, 1, 1], [[1, 1, 1], [1, 0, 0], [0, 0, 0]])
assert not alg.finitely_many_orbits(checked=True).is_infinite
assert alg.is_distributive()
c = alg.or_conditions()
assert c['c1'] == (True, []) and c['c2'] == (True, [])
assert c['c3'] == (False, ['arrow 1_1 -> 0_1: 2 + 3 = 5 > 4'])
assert alg.setting().vertices == ['0_1', '0_2', '0_3', '1_1', '1_2', '1_3']
assert qf.Algebra.parse(alg.serialize()).ranks == alg.ranks
assert qf.Algebra.parse('blocks: 1\\nrank: 2').finitely_many_orbits().is_infinite
",
    );
}

#[test]
fn errors_raise_quiverfin_error() {
    run_python(
        c"
import quiverfin_py as qf
for bad in ['dim: a=1', 'vertices: a\\ndim: a=-1']:
    try:
        qf.Setting.parse(bad)
    except qf.QuiverfinError as e:
        assert 'line' in str(e)
    else:
        raise AssertionError(bad)
try:
    qf.Setting(['a'], [('a', 'b')], [1])
except qf.QuiverfinError as e:
    assert 'unknown vertex' in str(e)
else:
    raise AssertionError('accepted unknown vertex')
big = qf.Setting(['a', 'b'], [('a', 'b'), ('a', 'b')], [3, 3])
try:
    big.count_orbits(5, budget=100)
except qf.QuiverfinError as e:
    assert 'budget' in str(e)
else:
    raise AssertionError('budget ignored')
",
    );
}
