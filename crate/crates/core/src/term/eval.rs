use std::collections::BTreeMap;

use super::{Equation, Term};
use crate::algebra::{BckAlgebra, Element};
use crate::error::{Error, Result};

/// Values for free variables.
pub type Assignment = BTreeMap<String, Element>;

/// Evaluates `t` in `a`. Meet, negation and join are expanded into their
/// defining terms over `·` and `1`.
pub fn eval(a: &BckAlgebra, t: &Term, assignment: &Assignment) -> Result<Element> {
    Ok(match t {
        Term::Var(v) => {
            let x = *assignment.get(v).ok_or_else(|| Error::UnboundVariable(v.clone()))?;
            a.check_element(x)?
        }
        Term::Zero => 0,
        Term::One => a.bound().ok_or(Error::Unbounded)?,
        Term::Dot(l, r) => a.op(eval(a, l, assignment)?, eval(a, r, assignment)?),
        Term::Meet(l, r) => a.meet(eval(a, l, assignment)?, eval(a, r, assignment)?),
        Term::Join(l, r) => a.join(eval(a, l, assignment)?, eval(a, r, assignment)?)?,
        Term::Neg(t) => a.neg(eval(a, t, assignment)?)?,
    })
}

/// Whether both sides of `eq` evaluate to the same element.
pub fn holds(a: &BckAlgebra, eq: &Equation, assignment: &Assignment) -> Result<bool> {
    Ok(eval(a, eq.lhs(), assignment)? == eval(a, eq.rhs(), assignment)?)
}

#[derive(Debug, Clone, Copy)]
enum Instr {
    Slot(usize),
    Const(Element),
    Dot,
    Meet,
    Join,
    Neg,
}

/// An equation bound to one algebra, with variables resolved to tuple
/// positions, for evaluating many assignments quickly.
#[derive(Debug, Clone)]
pub struct CompiledEquation<'a> {
    algebra: &'a BckAlgebra,
    lhs: Vec<Instr>,
    rhs: Vec<Instr>,
    one: Element,
    arity: usize,
}

impl<'a> CompiledEquation<'a> {
    pub fn new(eq: &Equation, algebra: &'a BckAlgebra) -> Result<Self> {
        let one = match algebra.bound() {
            Some(one) => one,
            None if eq.needs_bound() => return Err(Error::Unbounded),
            None => 0,
        };
        let mut lhs = Vec::new();
        let mut rhs = Vec::new();
        compile(eq.lhs(), eq.vars(), one, &mut lhs);
        compile(eq.rhs(), eq.vars(), one, &mut rhs);
        Ok(CompiledEquation {
            algebra,
            lhs,
            rhs,
            one,
            arity: eq.arity(),
        })
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    /// `values[i]` is the value of the `i`-th variable of the equation.
    pub fn holds_at(&self, values: &[Element], stack: &mut Vec<Element>) -> bool {
        let l = self.run(&self.lhs, values, stack);
        let r = self.run(&self.rhs, values, stack);
        l == r
    }

    fn run(&self, program: &[Instr], values: &[Element], stack: &mut Vec<Element>) -> Element {
        let a = self.algebra;
        stack.clear();
        for instr in program {
            let v = match *instr {
                Instr::Slot(i) => values[i],
                Instr::Const(c) => c,
                Instr::Neg => {
                    let x = stack.pop().expect("operand");
                    a.op(self.one, x)
                }
                Instr::Dot | Instr::Meet | Instr::Join => {
                    let y = stack.pop().expect("operand");
                    let x = stack.pop().expect("operand");
                    match instr {
                        Instr::Dot => a.op(x, y),
                        Instr::Meet => a.meet(x, y),
                        _ => {
                            let m = a.meet(a.op(self.one, x), a.op(self.one, y));
                            a.op(self.one, m)
                        }
                    }
                }
            };
            stack.push(v);
        }
        stack.pop().expect("a term leaves one value")
    }
}

fn compile(t: &Term, vars: &[String], one: Element, out: &mut Vec<Instr>) {
    match t {
        Term::Var(v) => {
            let slot = vars.iter().position(|w| w == v).expect("variable list is complete");
            out.push(Instr::Slot(slot));
        }
        Term::Zero => out.push(Instr::Const(0)),
        Term::One => out.push(Instr::Const(one)),
        Term::Neg(t) => {
            compile(t, vars, one, out);
            out.push(Instr::Neg);
        }
        Term::Dot(l, r) | Term::Meet(l, r) | Term::Join(l, r) => {
            compile(l, vars, one, out);
            compile(r, vars, one, out);
            out.push(match t {
                Term::Dot(..) => Instr::Dot,
                Term::Meet(..) => Instr::Meet,
                _ => Instr::Join,
            });
        }
    }
}
