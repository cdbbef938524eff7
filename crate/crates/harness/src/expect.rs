//! Declarative expectations and their evaluation against observed values.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Value {
    Int(i64),
    Bool(bool),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Int(k) => write!(f, "{k}"),
            Value::Bool(b) => write!(f, "{b}"),
        }
    }
}

impl From<i64> for Value {
    fn from(k: i64) -> Self {
        Value::Int(k)
    }
}

impl From<u64> for Value {
    fn from(k: u64) -> Self {
        Value::Int(k as i64)
    }
}

impl From<usize> for Value {
    fn from(k: usize) -> Self {
        Value::Int(k as i64)
    }
}

impl From<bool> for Value {
    fn from(b: bool) -> Self {
        Value::Bool(b)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Relation {
    Eq,
    Ge,
    Le,
}

impl Relation {
    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Eq => "==",
            Relation::Ge => ">=",
            Relation::Le => "<=",
        }
    }

    /// Mixed kinds never compare true; booleans only support `Eq`.
    pub fn holds(self, actual: Value, expected: Value) -> bool {
        match (actual, expected) {
            (Value::Int(a), Value::Int(e)) => match self {
                Relation::Eq => a == e,
                Relation::Ge => a >= e,
                Relation::Le => a <= e,
            },
            (Value::Bool(a), Value::Bool(e)) => self == Relation::Eq && a == e,
            _ => false,
        }
    }
}

/// `quantity <relation> expected`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Expectation {
    pub quantity: String,
    pub relation: Relation,
    pub expected: Value,
}

impl Expectation {
    pub fn eq(quantity: impl Into<String>, expected: impl Into<Value>) -> Self {
        Self::new(quantity, Relation::Eq, expected)
    }

    pub fn ge(quantity: impl Into<String>, expected: impl Into<Value>) -> Self {
        Self::new(quantity, Relation::Ge, expected)
    }

    pub fn le(quantity: impl Into<String>, expected: impl Into<Value>) -> Self {
        Self::new(quantity, Relation::Le, expected)
    }

    fn new(quantity: impl Into<String>, relation: Relation, expected: impl Into<Value>) -> Self {
        Expectation {
            quantity: quantity.into(),
            relation,
            expected: expected.into(),
        }
    }
}

/// An evaluated expectation. A quantity missing from the observation fails.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub quantity: String,
    pub relation: Relation,
    pub expected: Value,
    pub actual: Option<Value>,
    pub holds: bool,
}

pub type Observation = BTreeMap<String, Value>;

pub fn evaluate(expectations: &[Expectation], observed: &Observation) -> Vec<Check> {
    expectations
        .iter()
        .map(|e| {
            let actual = observed.get(&e.quantity).copied();
            Check {
                quantity: e.quantity.clone(),
                relation: e.relation,
                expected: e.expected,
                actual,
                holds: actual.is_some_and(|a| e.relation.holds(a, e.expected)),
            }
        })
        .collect()
}
