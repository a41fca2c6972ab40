//! Knot quandle presentations: generators (arcs) and one crossing relation per crossing.
//!
//! The text format is line oriented:
//!
//! ```text
//! knot 4_1
//! gens a b c d
//! rel c a d      # c*a=d
//! rel a c b +    # optional crossing sign
//! ```
//!
//! `#` starts a comment, blank lines are ignored and a file may hold several
//! `knot` blocks. A relation `rel x y z` always means `x*y=z`; a relation read
//! off a negative crossing as `x*^{-1}y=z` is stored as `z*y=x`
//! (see [`CrossingRelation::from_inverse`]).

mod catalog;

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use catalog::{catalog, catalog_lookup, catalog_names, CATALOG_SOURCE};

/// Index of a generator inside its presentation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GenId(pub usize);

impl GenId {
    pub fn index(self) -> usize {
        self.0
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generator {
    pub id: GenId,
    pub label: String,
}

/// Crossing sign. Kept for provenance only; the analysis does not depend on it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    fn symbol(self) -> char {
        match self {
            Sign::Positive => '+',
            Sign::Negative => '-',
        }
    }
}

/// The relation `operand * operator = result` at one crossing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CrossingRelation {
    pub operand: GenId,
    /// The over-arc.
    pub operator: GenId,
    pub result: GenId,
    pub sign: Option<Sign>,
}

impl CrossingRelation {
    pub fn new(operand: GenId, operator: GenId, result: GenId) -> Self {
        CrossingRelation {
            operand,
            operator,
            result,
            sign: None,
        }
    }

    /// Builds the relation `operand *^{-1} operator = result`, normalized to
    /// `result * operator = operand`.
    pub fn from_inverse(operand: GenId, operator: GenId, result: GenId) -> Self {
        CrossingRelation {
            operand: result,
            operator,
            result: operand,
            sign: Some(Sign::Negative),
        }
    }

    pub fn with_sign(mut self, sign: Sign) -> Self {
        self.sign = Some(sign);
        self
    }

    /// `x*x=x`.
    pub fn is_tautology(&self) -> bool {
        self.operand == self.operator && self.operand == self.result
    }

    pub fn generators(&self) -> [GenId; 3] {
        [self.operand, self.operator, self.result]
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KnotPresentation {
    name: String,
    generators: Vec<Generator>,
    relations: Vec<CrossingRelation>,
}

impl KnotPresentation {
    /// Builds a presentation from labels and `(operand, operator, result)` label triples.
    pub fn from_labels<S: AsRef<str>>(
        name: &str,
        labels: &[S],
        relations: &[(&str, &str, &str)],
    ) -> Result<Self> {
        let mut builder = Builder::new(name.to_string(), 0);
        builder.set_generators(labels.iter().map(|l| l.as_ref().to_string()), 0)?;
        for (x, y, z) in relations {
            builder.push_relation(x, y, z, None, 0)?;
        }
        builder.finish()
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn relations(&self) -> &[CrossingRelation] {
        &self.relations
    }

    pub fn generator_count(&self) -> usize {
        self.generators.len()
    }

    pub fn label(&self, id: GenId) -> &str {
        &self.generators[id.0].label
    }

    pub fn labels(&self) -> Vec<&str> {
        self.generators.iter().map(|g| g.label.as_str()).collect()
    }

    pub fn find(&self, label: &str) -> Option<GenId> {
        self.generators
            .iter()
            .find(|g| g.label == label)
            .map(|g| g.id)
    }

    /// Renders the relation as `x*y=z` using labels.
    pub fn relation_string(&self, rel: &CrossingRelation) -> String {
        format!(
            "{}*{}={}",
            self.label(rel.operand),
            self.label(rel.operator),
            self.label(rel.result)
        )
    }

    /// Serializes this presentation as one block of the text format.
    pub fn to_kq(&self) -> String {
        let mut out = format!("knot {}\ngens", self.name);
        for g in &self.generators {
            out.push(' ');
            out.push_str(&g.label);
        }
        out.push('\n');
        for rel in &self.relations {
            out.push_str(&format!(
                "rel {} {} {}",
                self.label(rel.operand),
                self.label(rel.operator),
                self.label(rel.result)
            ));
            if let Some(sign) = rel.sign {
                out.push(' ');
                out.push(sign.symbol());
            }
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for KnotPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_kq())
    }
}

struct Builder {
    name: String,
    start_line: usize,
    generators: Option<Vec<Generator>>,
    index: HashMap<String, GenId>,
    relations: Vec<CrossingRelation>,
}

impl Builder {
    fn new(name: String, start_line: usize) -> Self {
        Builder {
            name,
            start_line,
            generators: None,
            index: HashMap::new(),
            relations: Vec::new(),
        }
    }

    fn set_generators(&mut self, labels: impl Iterator<Item = String>, line: usize) -> Result<()> {
        if self.generators.is_some() {
            return Err(Error::Malformed {
                line,
                message: format!("second `gens` line in knot `{}`", self.name),
            });
        }
        let mut gens = Vec::new();
        for label in labels {
            if self.index.contains_key(&label) {
                return Err(Error::DuplicateGenerator { line, label });
            }
            let id = GenId(gens.len());
            self.index.insert(label.clone(), id);
            gens.push(Generator { id, label });
        }
        if gens.is_empty() {
            return Err(Error::Malformed {
                line,
                message: "`gens` needs at least one label".into(),
            });
        }
        self.generators = Some(gens);
        Ok(())
    }

    fn lookup(&self, label: &str, line: usize) -> Result<GenId> {
        self.index
            .get(label)
            .copied()
            .ok_or_else(|| Error::UnknownLabel {
                line,
                label: label.to_string(),
            })
    }

    fn push_relation(
        &mut self,
        x: &str,
        y: &str,
        z: &str,
        sign: Option<Sign>,
        line: usize,
    ) -> Result<()> {
        if self.generators.is_none() {
            return Err(Error::Malformed {
                line,
                message: "`rel` before `gens`".into(),
            });
        }
        let operand = self.lookup(x, line)?;
        let operator = self.lookup(y, line)?;
        let result = self.lookup(z, line)?;
        if operand == operator && result != operand {
            return Err(Error::IdempotencyViolation {
                line,
                operand: x.to_string(),
                result: z.to_string(),
            });
        }
        self.relations.push(CrossingRelation {
            operand,
            operator,
            result,
            sign,
        });
        Ok(())
    }

    fn finish(self) -> Result<KnotPresentation> {
        let generators = self.generators.ok_or_else(|| Error::Malformed {
            line: self.start_line,
            message: format!("knot `{}` has no `gens` line", self.name),
        })?;
        Ok(KnotPresentation {
            name: self.name,
            generators,
            relations: self.relations,
        })
    }
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

/// Parses every `knot` block in `text`, in file order.
pub fn parse_presentations(text: &str) -> Result<Vec<KnotPresentation>> {
    let mut done = Vec::new();
    let mut current: Option<Builder> = None;

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let mut tokens = strip_comment(raw).split_whitespace();
        let Some(keyword) = tokens.next() else {
            continue;
        };
        let args: Vec<&str> = tokens.collect();
        match keyword {
            "knot" => {
                let [name] = args.as_slice() else {
                    return Err(Error::Malformed {
                        line,
                        message: "expected `knot <name>`".into(),
                    });
                };
                if let Some(b) = current.take() {
                    done.push(b.finish()?);
                }
                current = Some(Builder::new(name.to_string(), line));
            }
            "gens" | "rel" => {
                let Some(b) = current.as_mut() else {
                    return Err(Error::Malformed {
                        line,
                        message: format!("`{keyword}` outside of a `knot` block"),
                    });
                };
                if keyword == "gens" {
                    b.set_generators(args.iter().map(|s| s.to_string()), line)?;
                } else {
                    let sign = match args.get(3) {
                        None => None,
                        Some(&"+") => Some(Sign::Positive),
                        Some(&"-") => Some(Sign::Negative),
                        Some(other) => {
                            return Err(Error::Malformed {
                                line,
                                message: format!("crossing sign must be `+` or `-`, got `{other}`"),
                            })
                        }
                    };
                    if !(3..=4).contains(&args.len()) {
                        return Err(Error::Malformed {
                            line,
                            message: "expected `rel <operand> <operator> <result> [+|-]`".into(),
                        });
                    }
                    b.push_relation(args[0], args[1], args[2], sign, line)?;
                }
            }
            other => {
                return Err(Error::Malformed {
                    line,
                    message: format!("unknown keyword `{other}`"),
                })
            }
        }
    }
    if let Some(b) = current.take() {
        done.push(b.finish()?);
    }
    Ok(done)
}

/// Parses text holding exactly one `knot` block.
pub fn parse_presentation(text: &str) -> Result<KnotPresentation> {
    let mut all = parse_presentations(text)?;
    if all.len() != 1 {
        return Err(Error::BlockCount { found: all.len() });
    }
    Ok(all.remove(0))
}
