use super::Strip;
use crate::error::Result;
use crate::exact::Rat;

/// A vertex of the staircase: `x_j` before or after the step (1-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Slot {
    Old(usize),
    New(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FaceKind {
    Bulk,
    Minus,
    Plus,
}

/// One elementary face between the two staircases.
///
/// Bulk faces list `(u, ũ, û, ŵ)` with parameters `(a, b)`; boundary faces
/// list `(x, y, z)` of `q(x, y, z; a)` and leave `b` unused. The forward
/// unknown is the last slot, the backward unknown the first.
#[derive(Clone, Debug, PartialEq)]
pub struct Face {
    pub kind: FaceKind,
    pub slots: Vec<Slot>,
    pub a: Rat,
    pub b: Rat,
    pub label: String,
}

impl Face {
    pub fn forward_unknown(&self) -> Slot {
        *self.slots.last().unwrap()
    }

    pub fn backward_unknown(&self) -> Slot {
        self.slots[0]
    }
}

impl Strip {
    /// Faces in the order the upward step solves them.
    pub fn faces(&self, params: &[Rat], new_params: &[Rat]) -> Result<Vec<Face>> {
        use Slot::{New, Old};
        let n = self.n;
        let k = self.k();
        let a = |j: usize| params[j - 1].clone();
        let ap = |j: usize| new_params[j - 1].clone();
        let mut out = vec![Face {
            kind: FaceKind::Minus,
            slots: vec![Old(1), Old(2), New(1)],
            a: a(1),
            b: a(1),
            label: "minus boundary (x′1)".into(),
        }];
        let odd_corners = if n % 2 == 1 { k.saturating_sub(1) } else { k };
        for i in 1..=odd_corners {
            out.push(Face {
                kind: FaceKind::Bulk,
                slots: vec![Old(2 * i + 1), Old(2 * i + 2), Old(2 * i), New(2 * i + 1)],
                a: a(2 * i + 1),
                b: a(2 * i),
                label: format!("quad (x′{})", 2 * i + 1),
            });
        }
        let right = self.right_param(params)?;
        let plus = |y: Slot| Face {
            kind: FaceKind::Plus,
            slots: vec![Old(n), y, New(n)],
            a: right.clone(),
            b: right.clone(),
            label: format!("plus boundary (x′{n})"),
        };
        if n % 2 == 1 {
            out.push(plus(Old(n - 1)));
        }
        for i in 1..=k {
            out.push(Face {
                kind: FaceKind::Bulk,
                slots: vec![Old(2 * i), New(2 * i + 1), New(2 * i - 1), New(2 * i)],
                a: ap(2 * i - 1),
                b: ap(2 * i),
                label: format!("quad (x′{})", 2 * i),
            });
        }
        if n % 2 == 0 {
            out.push(plus(New(n - 1)));
        }
        Ok(out)
    }
}

/// Order for the downward step: even bulk faces, the plus boundary, odd
/// bulk faces, the minus boundary.
pub(super) fn backward_order(faces: &[Face]) -> Vec<&Face> {
    let even = |f: &&Face| f.kind == FaceKind::Bulk && matches!(f.forward_unknown(), Slot::New(j) if j % 2 == 0);
    let odd = |f: &&Face| f.kind == FaceKind::Bulk && matches!(f.forward_unknown(), Slot::New(j) if j % 2 == 1);
    let mut out: Vec<&Face> = faces.iter().filter(even).collect();
    out.extend(faces.iter().filter(|f| f.kind == FaceKind::Plus));
    out.extend(faces.iter().filter(odd));
    out.extend(faces.iter().filter(|f| f.kind == FaceKind::Minus));
    out
}
