//! Declarative colored Petri net structure and validation.
//!
//! A [`Net`] is the name-based form produced by the parser and the model
//! builders. [`Net::validate`] reports structural problems as diagnostics;
//! a net with no diagnostics can be compiled into the index-resolved form
//! used by the simulator and the state-space explorer (see
//! [`crate::compiled::CompiledNet`]).

use std::fmt;

/// Finite enumeration of color values. Declaration order of the values is
/// the canonical order used everywhere (multiset slots, serialization).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColorSet {
    pub name: String,
    pub values: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Variable {
    pub name: String,
    pub color_set: String,
}

/// One `count`value` entry of an initial marking.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InitEntry {
    pub count: u64,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Place {
    pub name: String,
    pub color_set: String,
    pub capacity: Option<u64>,
    pub initial: Vec<InitEntry>,
}

/// A term of an arc inscription: either a constant color value or a typed
/// variable, with a positive multiplicity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Term {
    Value(String),
    Var(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArcTerm {
    pub multiplicity: u64,
    pub term: Term,
}

/// Arc inscription: a formal sum of terms, evaluated under a binding to a
/// multiset over the color set of the place the arc touches.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArcInscription {
    pub terms: Vec<ArcTerm>,
}

impl ArcInscription {
    /// Total token count produced/consumed, independent of the binding.
    pub fn size(&self) -> u64 {
        self.terms.iter().map(|t| t.multiplicity).sum()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transition {
    pub name: String,
    pub inputs: Vec<(String, ArcInscription)>,
    pub outputs: Vec<(String, ArcInscription)>,
    /// Inhibitor arcs: `(place, threshold)`. The transition is disabled
    /// unless the place holds fewer than `threshold` tokens in total.
    pub inhibitors: Vec<(String, u64)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Net {
    pub name: String,
    pub color_sets: Vec<ColorSet>,
    pub variables: Vec<Variable>,
    pub places: Vec<Place>,
    pub transitions: Vec<Transition>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiagnosticKind {
    DanglingReference,
    TypeMismatch,
    CapacityViolatedInitially,
    DuplicateName,
    InputAndInhibitorOverlap,
}

impl fmt::Display for DiagnosticKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            DiagnosticKind::DanglingReference => "dangling-reference",
            DiagnosticKind::TypeMismatch => "type-mismatch",
            DiagnosticKind::CapacityViolatedInitially => "capacity-violated-initially",
            DiagnosticKind::DuplicateName => "duplicate-name",
            DiagnosticKind::InputAndInhibitorOverlap => "input-and-inhibitor-overlap",
        };
        f.write_str(s)
    }
}

/// One validation finding: what kind of problem and which element it is on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostic {
    pub kind: DiagnosticKind,
    pub element: String,
    pub message: String,
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [{}]: {}", self.kind, self.element, self.message)
    }
}

fn diag(kind: DiagnosticKind, element: &str, message: String) -> Diagnostic {
    Diagnostic {
        kind,
        element: element.to_string(),
        message,
    }
}

impl Net {
    pub fn color_set(&self, name: &str) -> Option<&ColorSet> {
        self.color_sets.iter().find(|c| c.name == name)
    }

    pub fn place(&self, name: &str) -> Option<&Place> {
        self.places.iter().find(|p| p.name == name)
    }

    pub fn transition(&self, name: &str) -> Option<&Transition> {
        self.transitions.iter().find(|t| t.name == name)
    }

    pub fn variable(&self, name: &str) -> Option<&Variable> {
        self.variables.iter().find(|v| v.name == name)
    }

    /// Checks every structural invariant; returns an empty list iff the net
    /// is well formed.
    pub fn validate(&self) -> Vec<Diagnostic> {
        let mut out = Vec::new();

        self.check_duplicates(&mut out);

        for cs in &self.color_sets {
            let mut seen = Vec::new();
            for v in &cs.values {
                if seen.contains(&v) {
                    out.push(diag(
                        DiagnosticKind::DuplicateName,
                        &cs.name,
                        format!("color set {} declares value {} twice", cs.name, v),
                    ));
                }
                seen.push(v);
            }
        }

        for var in &self.variables {
            if self.color_set(&var.color_set).is_none() {
                out.push(diag(
                    DiagnosticKind::DanglingReference,
                    &var.name,
                    format!(
                        "variable {} references unknown color set {}",
                        var.name, var.color_set
                    ),
                ));
            }
            // A variable whose name collides with a color value would make
            // textual terms ambiguous; the serializer could not round-trip it.
            for cs in &self.color_sets {
                if cs.values.contains(&var.name) {
                    out.push(diag(
                        DiagnosticKind::DuplicateName,
                        &var.name,
                        format!(
                            "variable {} shadows a value of color set {}",
                            var.name, cs.name
                        ),
                    ));
                }
            }
        }

        for place in &self.places {
            match self.color_set(&place.color_set) {
                None => out.push(diag(
                    DiagnosticKind::DanglingReference,
                    &place.name,
                    format!(
                        "place {} references unknown color set {}",
                        place.name, place.color_set
                    ),
                )),
                Some(cs) => {
                    let mut total: u64 = 0;
                    for entry in &place.initial {
                        if !cs.values.contains(&entry.value) {
                            out.push(diag(
                                DiagnosticKind::TypeMismatch,
                                &place.name,
                                format!(
                                    "initial token {} is not a value of color set {}",
                                    entry.value, cs.name
                                ),
                            ));
                        }
                        total = total.checked_add(entry.count).expect("token count overflow");
                    }
                    if let Some(cap) = place.capacity {
                        if total > cap {
                            out.push(diag(
                                DiagnosticKind::CapacityViolatedInitially,
                                &place.name,
                                format!(
                                    "place {} holds {} tokens initially but has capacity {}",
                                    place.name, total, cap
                                ),
                            ));
                        }
                    }
                }
            }
        }

        for trans in &self.transitions {
            for (place_name, inscription) in trans.inputs.iter().chain(&trans.outputs) {
                self.check_arc(trans, place_name, inscription, &mut out);
            }
            for (place_name, _) in &trans.inhibitors {
                if self.place(place_name).is_none() {
                    out.push(diag(
                        DiagnosticKind::DanglingReference,
                        &trans.name,
                        format!(
                            "transition {} inhibitor references unknown place {}",
                            trans.name, place_name
                        ),
                    ));
                }
                if trans.inputs.iter().any(|(p, _)| p == place_name) {
                    out.push(diag(
                        DiagnosticKind::InputAndInhibitorOverlap,
                        &trans.name,
                        format!(
                            "place {} is both input and inhibitor of transition {}",
                            place_name, trans.name
                        ),
                    ));
                }
            }
        }

        out
    }

    fn check_duplicates(&self, out: &mut Vec<Diagnostic>) {
        fn dups<'a>(names: impl Iterator<Item = &'a str>, what: &str, out: &mut Vec<Diagnostic>) {
            let mut seen: Vec<&str> = Vec::new();
            for n in names {
                if seen.contains(&n) {
                    out.push(diag(
                        DiagnosticKind::DuplicateName,
                        n,
                        format!("{what} {n} declared more than once"),
                    ));
                }
                seen.push(n);
            }
        }
        dups(self.color_sets.iter().map(|c| c.name.as_str()), "color set", out);
        dups(self.variables.iter().map(|v| v.name.as_str()), "variable", out);
        dups(self.places.iter().map(|p| p.name.as_str()), "place", out);
        dups(self.transitions.iter().map(|t| t.name.as_str()), "transition", out);
    }

    fn check_arc(
        &self,
        trans: &Transition,
        place_name: &str,
        inscription: &ArcInscription,
        out: &mut Vec<Diagnostic>,
    ) {
        let Some(place) = self.place(place_name) else {
            out.push(diag(
                DiagnosticKind::DanglingReference,
                &trans.name,
                format!(
                    "transition {} references unknown place {}",
                    trans.name, place_name
                ),
            ));
            return;
        };
        let Some(cs) = self.color_set(&place.color_set) else {
            return; // reported on the place already
        };
        for arc_term in &inscription.terms {
            match &arc_term.term {
                Term::Value(v) => {
                    if !cs.values.contains(v) {
                        out.push(diag(
                            DiagnosticKind::TypeMismatch,
                            &trans.name,
                            format!(
                                "arc {}–{} uses value {} outside color set {}",
                                trans.name, place_name, v, cs.name
                            ),
                        ));
                    }
                }
                Term::Var(name) => match self.variable(name) {
                    None => out.push(diag(
                        DiagnosticKind::DanglingReference,
                        &trans.name,
                        format!(
                            "arc {}–{} uses undeclared variable {}",
                            trans.name, place_name, name
                        ),
                    )),
                    Some(var) => {
                        if var.color_set != place.color_set {
                            out.push(diag(
                                DiagnosticKind::TypeMismatch,
                                &trans.name,
                                format!(
                                    "variable {} has color set {} but place {} has {}",
                                    name, var.color_set, place_name, place.color_set
                                ),
                            ));
                        }
                    }
                },
            }
        }
    }
}
