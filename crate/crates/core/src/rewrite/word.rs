//! Words in root elements u_r(t), Hua elements h_r(λ) and Weyl elements n_r(t).

use serde_json::json;

use crate::chevalley::{self, GroupMatrix};
use crate::error::{Error, Result};
use crate::fields::{FieldSpec, QuadExtElem};
use crate::roots::{f4, RootId};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Atom {
    Root { r: RootId, t: QuadExtElem },
    Hua { r: RootId, lambda: QuadExtElem },
    N { r: RootId, t: QuadExtElem },
}

impl Atom {
    pub fn root(&self) -> RootId {
        match self {
            Atom::Root { r, .. } | Atom::Hua { r, .. } | Atom::N { r, .. } => *r,
        }
    }

    pub fn coeff(&self) -> &QuadExtElem {
        match self {
            Atom::Root { t, .. } | Atom::N { t, .. } => t,
            Atom::Hua { lambda, .. } => lambda,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Atom::Root { .. } => "u",
            Atom::Hua { .. } => "h",
            Atom::N { .. } => "n",
        }
    }

    /// Checks the tower level of the coefficient and that Hua and Weyl coefficients are nonzero.
    pub fn validate(&self, spec: &FieldSpec) -> Result<()> {
        if !matches!(self, Atom::Root { .. }) && self.coeff().is_zero() {
            return Err(Error::DivisionByZero);
        }
        chevalley::check_level(spec, self.root(), self.coeff())
    }

    pub fn mul_right(&self, m: &mut GroupMatrix) -> Result<()> {
        match self {
            Atom::Root { r, t } => {
                chevalley::mul_u_right(m, *r, t);
                Ok(())
            }
            Atom::Hua { r, lambda } => chevalley::mul_h_right(m, *r, lambda),
            Atom::N { r, t } => chevalley::mul_n_right(m, *r, t),
        }
    }

    pub fn mul_left(&self, m: &mut GroupMatrix) -> Result<()> {
        match self {
            Atom::Root { r, t } => {
                chevalley::mul_u_left(m, *r, t);
                Ok(())
            }
            Atom::Hua { r, lambda } => chevalley::mul_h_left(m, *r, lambda),
            Atom::N { r, t } => chevalley::mul_n_left(m, *r, t),
        }
    }

    /// The inverse atom (characteristic 2: u_r(t) and n_r(t) are involutions).
    pub fn inverse(&self) -> Result<Atom> {
        Ok(match self {
            Atom::Hua { r, lambda } => Atom::Hua { r: *r, lambda: lambda.inv().ok_or(Error::DivisionByZero)? },
            a => a.clone(),
        })
    }

    pub fn to_json(&self, spec: &FieldSpec) -> serde_json::Value {
        json!({
            "kind": self.kind(),
            "root": f4().root(self.root()).to_string(),
            "coeff": spec.format(self.coeff()),
        })
    }

    pub fn display(&self, spec: &FieldSpec) -> String {
        format!("{}{}[{}]", self.kind(), f4().root(self.root()), spec.format(self.coeff()))
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Word(pub Vec<Atom>);

impl Word {
    pub fn new() -> Word {
        Word(Vec::new())
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, a: Atom) {
        self.0.push(a);
    }

    pub fn concat(&self, other: &Word) -> Word {
        Word(self.0.iter().chain(other.0.iter()).cloned().collect())
    }

    pub fn inverse(&self) -> Result<Word> {
        self.0.iter().rev().map(Atom::inverse).collect::<Result<_>>().map(Word)
    }

    /// m ← m·word.
    pub fn mul_right(&self, m: &mut GroupMatrix) -> Result<()> {
        self.0.iter().try_for_each(|a| a.mul_right(m))
    }

    /// m ← word·m.
    pub fn mul_left(&self, m: &mut GroupMatrix) -> Result<()> {
        self.0.iter().rev().try_for_each(|a| a.mul_left(m))
    }

    pub fn eval(&self, spec: &FieldSpec) -> Result<GroupMatrix> {
        let mut m = chevalley::identity(spec);
        self.mul_right(&mut m)?;
        Ok(m)
    }

    pub fn to_json(&self, spec: &FieldSpec) -> serde_json::Value {
        serde_json::Value::Array(self.0.iter().map(|a| a.to_json(spec)).collect())
    }

    pub fn display(&self, spec: &FieldSpec) -> String {
        self.0.iter().map(|a| a.display(spec)).collect::<Vec<_>>().join(" ")
    }
}

impl FromIterator<Atom> for Word {
    fn from_iter<I: IntoIterator<Item = Atom>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}
