//! Python bindings. Permutations cross the boundary as lists in one-line
//! notation; polynomials as their canonical text plus `(coeff, exps)` terms.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use delent::statistics::Group;
use delent::{GenFunSpec, MultiPoly, Params, Permutation, Statistic};

fn value_error(e: delent::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn perm(images: Vec<usize>) -> PyResult<Permutation> {
    Permutation::new(&images).map_err(value_error)
}

fn group(name: &str) -> PyResult<Group> {
    match name {
        "S" | "s" => Ok(Group::S),
        "A" | "a" => Ok(Group::A),
        _ => Err(PyValueError::new_err(format!(
            "group must be S or A, got {name}"
        ))),
    }
}

type Terms = Vec<(i64, Vec<u32>)>;

/// Exponent vectors padded to `(q, t, t1, ...)`, as in the JSON output.
fn terms(p: &MultiPoly) -> Terms {
    let width = 2 + p.arity();
    p.terms()
        .map(|(m, c)| {
            let mut exps = m.exps().to_vec();
            exps.resize(width.max(exps.len()), 0);
            (c, exps)
        })
        .collect()
}

/// Statistic profile of `perm`; for group A the permutation lies in `A_{n+1}`.
#[pyfunction]
fn stat<'py>(
    py: Python<'py>,
    group_name: &str,
    images: Vec<usize>,
) -> PyResult<Bound<'py, PyDict>> {
    let pi = perm(images)?;
    let p = match group(group_name)? {
        Group::S => delent::stat_profile_s(&pi),
        Group::A => delent::stat_profile_a(&pi).map_err(value_error)?,
    };
    let d = PyDict::new(py);
    d.set_item("n", p.n)?;
    d.set_item("length", p.length)?;
    d.set_item("des_set", p.des_set)?;
    d.set_item("des", p.des)?;
    d.set_item("maj", p.maj)?;
    d.set_item("rmaj", p.rmaj)?;
    d.set_item("del", p.del)?;
    d.set_item("del_set", p.del_set)?;
    d.set_item("epsilon", p.epsilon)?;
    Ok(d)
}

/// Canonical word as text, factors separated by `|`.
#[pyfunction]
fn canon(group_name: &str, images: Vec<usize>) -> PyResult<String> {
    let pi = perm(images)?;
    match group(group_name)? {
        Group::S => Ok(delent::s_canonical(&pi).to_string()),
        Group::A => Ok(delent::a_canonical(&pi).map_err(value_error)?.to_string()),
    }
}

#[pyfunction]
fn f_map(images: Vec<usize>) -> PyResult<Vec<usize>> {
    Ok(delent::f_map(&perm(images)?)
        .map_err(value_error)?
        .one_line())
}

#[pyfunction]
fn fiber(images: Vec<usize>) -> PyResult<Vec<Vec<usize>>> {
    Ok(delent::fiber(&perm(images)?)
        .iter()
        .map(Permutation::one_line)
        .collect())
}

/// B-shuffles of `S_n` in lexicographic order.
#[pyfunction]
fn shuffles(n: usize, b: Vec<usize>) -> PyResult<Vec<Vec<usize>>> {
    let set = delent::ShuffleSet::new(n, &b).map_err(value_error)?;
    Ok(set.enumerate().iter().map(Permutation::one_line).collect())
}

/// Returns `(text, terms)` for the generating function over `S_n` or `A_{n+1}`.
#[pyfunction]
#[pyo3(signature = (group_name, n, q_stat = "length", t_stat = "del", multivar = false))]
fn genfun(
    group_name: &str,
    n: usize,
    q_stat: &str,
    t_stat: &str,
    multivar: bool,
) -> PyResult<(String, Terms)> {
    let spec = GenFunSpec {
        group: group(group_name)?,
        n,
        q_stat: q_stat.parse::<Statistic>().map_err(value_error)?,
        t_stat: match t_stat {
            "none" => None,
            other => Some(other.parse::<Statistic>().map_err(value_error)?),
        },
        multivar,
    };
    let p = delent::generating_function(&spec).map_err(value_error)?;
    Ok((p.to_text(), terms(&p)))
}

#[pyfunction]
fn list_identities() -> Vec<&'static str> {
    delent::list_identities().iter().map(|i| i.name).collect()
}

/// Runs one registry check and returns the report as a dict.
#[pyfunction]
#[pyo3(signature = (name, n, i = None, k = None, force = false))]
fn verify<'py>(
    py: Python<'py>,
    name: &str,
    n: usize,
    i: Option<usize>,
    k: Option<usize>,
    force: bool,
) -> PyResult<Bound<'py, PyDict>> {
    let mut params = Params::new(n);
    params.i = i;
    params.k = k;
    let r = py
        .detach(|| delent::verify(name, &params, force))
        .map_err(value_error)?;
    let d = PyDict::new(py);
    d.set_item("identity", r.identity)?;
    d.set_item("params", r.params.to_string())?;
    d.set_item("pass", r.pass)?;
    d.set_item("points", r.points)?;
    d.set_item("point", r.point)?;
    d.set_item("lhs", r.lhs.to_text())?;
    d.set_item("rhs", r.rhs.to_text())?;
    d.set_item("failing_point", r.failing_point)?;
    d.set_item("elements_scanned", r.elements_scanned)?;
    Ok(d)
}

#[pymodule]
fn pydelent(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(stat, m)?)?;
    m.add_function(wrap_pyfunction!(canon, m)?)?;
    m.add_function(wrap_pyfunction!(f_map, m)?)?;
    m.add_function(wrap_pyfunction!(fiber, m)?)?;
    m.add_function(wrap_pyfunction!(shuffles, m)?)?;
    m.add_function(wrap_pyfunction!(genfun, m)?)?;
    m.add_function(wrap_pyfunction!(list_identities, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}
