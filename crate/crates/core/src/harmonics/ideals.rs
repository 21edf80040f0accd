use std::sync::Arc;

use serde::Serialize;

use super::locus::{big_var, big_variables, small_var, small_variables};
use crate::com::{Com, ElementSet, GroundSet, Sign, SignedVector};
use crate::error::{Error, Result};
use crate::exactla::{elementary_symmetric, monomials_of_degree, Monomial, Polynomial};
use crate::field::Field;
use crate::matroidal::{circuits, proper_nonempty_subsets, Circuit, FlatStructure, TotalOrder};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    /// `y_i^+ y_i^-` (affine list).
    SignProduct,
    /// `y_i^+ + y_i^- - 1` (affine list).
    SignSumMinusOne,
    /// Degree-two monomials in the variables of one element.
    DegreeTwo,
    /// `y_i^+ + y_i^-`, or `y_i^+ + y_i^- + z_i` in the big ring.
    SignSum,
    /// `prod y_i^{X(i)}` over a circuit.
    CircuitMonomial,
    /// `e_{s-1}` of the `y_i^{X(i)}` of a symmetric circuit.
    SymmetricCircuit,
    /// `prod z_c` over a minimal nonbasic set.
    NonbasicProduct,
    /// `z_B - z_B'` for basic sets of one flat.
    BasicDifference,
    /// `z_F y_i^±` for `i` in `F`.
    FlatSign,
    /// `z_F prod y_i^{X(i)}` over a circuit of the contraction at `F`.
    FlatCircuit,
    /// `z_F e_{s-1}(ỹ)` for a symmetric circuit of the contraction at `F`.
    FlatSymmetric,
}

#[derive(Clone, Debug)]
pub struct Generator<F: Field> {
    pub family: Family,
    pub poly: Polynomial<F>,
    /// Which element, circuit, flat or sets the generator comes from.
    pub source: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum IdealKind {
    /// The vanishing ideal of the small locus.
    SmallAffine,
    /// Its associated graded ideal.
    SmallGraded,
    Tilde,
    Big,
}

#[derive(Clone, Debug)]
pub struct IdealPresentation<F: Field> {
    pub kind: IdealKind,
    pub variables: Arc<[String]>,
    pub generators: Vec<Generator<F>>,
    /// `(flat, chosen basic set)` for the big ideal.
    pub basic_choice: Vec<(ElementSet, ElementSet)>,
    /// `(flat, circuit on the full ground set, J)` for the big ideal.
    pub j_choice: Vec<(ElementSet, SignedVector, ElementSet)>,
}

#[derive(Serialize)]
struct GeneratorJson<'a> {
    family: Family,
    source: &'a str,
    polynomial: String,
}

#[derive(Serialize)]
struct PresentationJson<'a> {
    kind: IdealKind,
    variables: &'a [String],
    generators: Vec<GeneratorJson<'a>>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    basic_choice: Vec<(String, String)>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    j_choice: Vec<(String, String, String)>,
}

impl<F: Field> IdealPresentation<F> {
    pub fn polynomials(&self) -> impl Iterator<Item = &Polynomial<F>> {
        self.generators.iter().map(|g| &g.poly)
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn to_json_value(&self, ground: &GroundSet) -> serde_json::Value {
        let j = PresentationJson {
            kind: self.kind,
            variables: &self.variables,
            generators: self
                .generators
                .iter()
                .map(|g| GeneratorJson {
                    family: g.family,
                    source: &g.source,
                    polynomial: g.poly.to_string(),
                })
                .collect(),
            basic_choice: self
                .basic_choice
                .iter()
                .map(|(f, b)| (ground.show(f), ground.show(b)))
                .collect(),
            j_choice: self
                .j_choice
                .iter()
                .map(|(f, x, j)| (ground.show(f), x.to_string(), ground.show(j)))
                .collect(),
        };
        serde_json::to_value(j).expect("presentation serializes")
    }
}

fn mono<F: Field>(field: &F, vars: &Arc<[String]>, m: Monomial) -> Polynomial<F> {
    Polynomial::monomial(field.clone(), vars.clone(), m)
}

fn sum_of_vars<F: Field>(field: &F, vars: &Arc<[String]>, vs: &[usize]) -> Polynomial<F> {
    let mut p = Polynomial::zero(field.clone(), vars.clone());
    for &v in vs {
        p.add_term(Monomial::var(v), field.one());
    }
    p
}

/// Degree-two monomials in the given variables, in graded-lex order.
fn degree_two<F: Field>(field: &F, vars: &Arc<[String]>, vs: &[usize]) -> Vec<Polynomial<F>> {
    monomials_of_degree(vs.len(), 2)
        .into_iter()
        .rev()
        .map(|m| {
            let pairs = m.exponents().map(|(v, e)| (vs[v], e));
            mono(field, vars, Monomial::from_pairs(pairs))
        })
        .collect()
}

/// `prod y_i^{X(i)}` with variable indices from `var`.
fn circuit_monomial(x: &SignedVector, var: impl Fn(usize, Sign) -> usize) -> Monomial {
    Monomial::product(x.support().iter().map(|i| var(i, x.get(i))))
}

/// Generators of the small vanishing ideal and of its associated graded
/// ideal: the affine list and the graded list.
pub fn small_ideal_generators<F: Field>(
    field: &F,
    m: &Com,
) -> Result<(IdealPresentation<F>, IdealPresentation<F>)> {
    let vars = small_variables(m);
    let g = m.ground();
    let cs = circuits(m)?;
    let mut affine = Vec::new();
    let mut graded = Vec::new();
    for i in 0..g.len() {
        let (p, q) = (small_var(i, Sign::Plus), small_var(i, Sign::Minus));
        let src = g.label(i).to_string();
        affine.push(Generator {
            family: Family::SignProduct,
            poly: mono(field, &vars, Monomial::product([p, q])),
            source: src.clone(),
        });
        let mut s = sum_of_vars(field, &vars, &[p, q]);
        s.add_term(Monomial::one(), field.neg(&field.one()));
        affine.push(Generator {
            family: Family::SignSumMinusOne,
            poly: s,
            source: src.clone(),
        });
        for poly in degree_two(field, &vars, &[p, q]) {
            graded.push(Generator {
                family: Family::DegreeTwo,
                poly,
                source: src.clone(),
            });
        }
        graded.push(Generator {
            family: Family::SignSum,
            poly: sum_of_vars(field, &vars, &[p, q]),
            source: src,
        });
    }
    for c in &cs {
        let gen = Generator {
            family: Family::CircuitMonomial,
            poly: mono(field, &vars, circuit_monomial(&c.vector, small_var)),
            source: c.vector.to_string(),
        };
        affine.push(gen.clone());
        graded.push(gen);
    }
    for c in cs.iter().filter(|c| c.symmetric) {
        let ys: Vec<Polynomial<F>> = c
            .support()
            .iter()
            .map(|i| Polynomial::var(field.clone(), vars.clone(), small_var(i, c.vector.get(i))))
            .collect();
        graded.push(Generator {
            family: Family::SymmetricCircuit,
            poly: elementary_symmetric(ys.len() - 1, &ys)?,
            source: c.vector.to_string(),
        });
    }
    let make = |kind, generators| IdealPresentation {
        kind,
        variables: vars.clone(),
        generators,
        basic_choice: Vec::new(),
        j_choice: Vec::new(),
    };
    Ok((make(IdealKind::SmallAffine, affine), make(IdealKind::SmallGraded, graded)))
}

/// A flat with its contraction data, circuits lifted to the full ground
/// set.
#[derive(Clone, Debug)]
pub struct FlatData {
    pub flat: ElementSet,
    pub codim: usize,
    pub basic: Vec<ElementSet>,
    /// Ground indices of the contraction, in order.
    pub rest: Vec<usize>,
    pub contraction: Com,
    pub circuits: Vec<Circuit>,
    pub lifted: Vec<Circuit>,
}

impl FlatData {
    /// Contraction-indexed set to full ground indices.
    pub fn lift_set(&self, s: &ElementSet) -> ElementSet {
        s.iter().map(|k| self.rest[k]).collect()
    }

    /// The order restricted to the contraction, as contraction indices.
    pub fn restricted_order(&self, ord: &TotalOrder) -> TotalOrder {
        let mut pos: Vec<usize> = (0..self.rest.len()).collect();
        pos.sort_by_key(|&k| ord.rank(self.rest[k]));
        TotalOrder::new(pos).expect("restriction of a total order")
    }
}

/// Everything about the flats that the big ideal and its basis need.
#[derive(Clone, Debug)]
pub struct BigContext {
    pub n: usize,
    pub structure: FlatStructure,
    pub flats: Vec<FlatData>,
}

impl BigContext {
    pub fn new(m: &Com) -> Result<Self> {
        let n = m.ground().len();
        let structure = FlatStructure::new(m)?;
        let flats = structure
            .flats()
            .flats()
            .iter()
            .enumerate()
            .map(|(k, f)| {
                let contraction = m.contract(f)?;
                let rest: Vec<usize> = (0..n).filter(|&i| !f.contains(i)).collect();
                let cs = circuits(&contraction)?;
                let lifted = cs
                    .iter()
                    .map(|c| {
                        let mut v = SignedVector::zeros(n);
                        for (k, &i) in rest.iter().enumerate() {
                            v.set(i, c.vector.get(k));
                        }
                        Circuit {
                            vector: v,
                            symmetric: c.symmetric,
                        }
                    })
                    .collect();
                Ok(FlatData {
                    flat: f.clone(),
                    codim: structure.codim_at(k),
                    basic: structure.basic_sets_at(k).to_vec(),
                    rest,
                    contraction,
                    circuits: cs,
                    lifted,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(BigContext { n, structure, flats })
    }

    /// The lexicographically smallest basic set of each flat.
    pub fn default_basic_choice(&self) -> Vec<ElementSet> {
        self.flats.iter().map(|f| f.basic[0].clone()).collect()
    }

    /// Checks that `choice[k]` is basic for flat `k`.
    pub fn check_basic_choice(&self, choice: &[ElementSet]) -> Result<()> {
        if choice.len() != self.flats.len() {
            return Err(Error::InvalidChoice(format!(
                "{} basic sets for {} flats",
                choice.len(),
                self.flats.len()
            )));
        }
        for (f, b) in self.flats.iter().zip(choice) {
            if !f.basic.contains(b) {
                return Err(Error::InvalidChoice(format!(
                    "{:?} is not basic for {:?}",
                    b.to_vec(),
                    f.flat.to_vec()
                )));
            }
        }
        Ok(())
    }
}

/// `{min Supp(X)}` under `ord`.
pub fn default_j(ord: &TotalOrder, x: &SignedVector) -> ElementSet {
    ord.min_of(&x.support()).into_iter().collect()
}

/// Every admissible `J` for a circuit.
pub fn all_j(x: &SignedVector) -> Vec<ElementSet> {
    proper_nonempty_subsets(&x.support())
}

fn z_product<F: Field>(field: &F, vars: &Arc<[String]>, s: &ElementSet) -> Polynomial<F> {
    mono(field, vars, Monomial::product(s.iter().map(|i| big_var(i, Sign::Zero))))
}

/// The tilde ideal: products over minimal nonbasic sets, then differences
/// of basic-set products flat by flat.
pub fn tilde_ideal_generators<F: Field>(field: &F, m: &Com, ctx: &BigContext) -> IdealPresentation<F> {
    let vars = big_variables(m);
    let g = m.ground();
    let mut gens = Vec::new();
    for c in ctx.structure.minimal_nonbasic_sets() {
        gens.push(Generator {
            family: Family::NonbasicProduct,
            poly: z_product(field, &vars, &c),
            source: g.show(&c),
        });
    }
    for f in &ctx.flats {
        for (a, b1) in f.basic.iter().enumerate() {
            for b2 in &f.basic[a + 1..] {
                gens.push(Generator {
                    family: Family::BasicDifference,
                    poly: z_product(field, &vars, b1)
                        .sub(&z_product(field, &vars, b2))
                        .expect("same ring"),
                    source: format!("{} {} {}", g.show(&f.flat), g.show(b1), g.show(b2)),
                });
            }
        }
    }
    IdealPresentation {
        kind: IdealKind::Tilde,
        variables: vars,
        generators: gens,
        basic_choice: Vec::new(),
        j_choice: Vec::new(),
    }
}

/// `z_B e_{s-1}(ỹ_i : i in Supp X)` with `ỹ_i = y_i^{X(i)} + z_i` on `J`.
pub fn flat_symmetric_generator<F: Field>(
    field: &F,
    vars: &Arc<[String]>,
    b: &ElementSet,
    x: &SignedVector,
    j: &ElementSet,
) -> Result<Polynomial<F>> {
    let supp = x.support();
    if j.is_empty() || !j.is_subset(&supp) || j.len() >= supp.len() {
        return Err(Error::InvalidChoice(format!(
            "J = {:?} is not a nonempty proper subset of the support of {x}",
            j.to_vec()
        )));
    }
    let ys: Vec<Polynomial<F>> = supp
        .iter()
        .map(|i| {
            let mut vs = vec![big_var(i, x.get(i))];
            if j.contains(i) {
                vs.push(big_var(i, Sign::Zero));
            }
            sum_of_vars(field, vars, &vs)
        })
        .collect();
    z_product(field, vars, b).mul(&elementary_symmetric(ys.len() - 1, &ys)?)
}

/// The big ideal: the tilde generators and the five families, with `z_F`
/// realized as the product over `basic[k]` and `J` picked by `j_of`.
pub fn big_ideal_generators<F: Field>(
    field: &F,
    m: &Com,
    ctx: &BigContext,
    basic: &[ElementSet],
    j_of: &dyn Fn(&ElementSet, &SignedVector) -> ElementSet,
) -> Result<IdealPresentation<F>> {
    ctx.check_basic_choice(basic)?;
    let mut pres = tilde_ideal_generators(field, m, ctx);
    pres.kind = IdealKind::Big;
    let vars = pres.variables.clone();
    let g = m.ground();
    let gens = &mut pres.generators;
    for i in 0..ctx.n {
        let vs = [big_var(i, Sign::Plus), big_var(i, Sign::Minus), big_var(i, Sign::Zero)];
        for poly in degree_two(field, &vars, &vs) {
            gens.push(Generator {
                family: Family::DegreeTwo,
                poly,
                source: g.label(i).to_string(),
            });
        }
        gens.push(Generator {
            family: Family::SignSum,
            poly: sum_of_vars(field, &vars, &vs),
            source: g.label(i).to_string(),
        });
    }
    for (f, b) in ctx.flats.iter().zip(basic) {
        let zb = z_product(field, &vars, b);
        let fl = g.show(&f.flat);
        for i in f.flat.iter() {
            for s in [Sign::Plus, Sign::Minus] {
                gens.push(Generator {
                    family: Family::FlatSign,
                    poly: zb.mul_monomial(&Monomial::var(big_var(i, s))),
                    source: format!("{fl} {}", g.label(i)),
                });
            }
        }
        for c in &f.lifted {
            gens.push(Generator {
                family: Family::FlatCircuit,
                poly: zb.mul_monomial(&circuit_monomial(&c.vector, big_var)),
                source: format!("{fl} {}", c.vector),
            });
        }
        for c in f.lifted.iter().filter(|c| c.symmetric) {
            let j = j_of(&f.flat, &c.vector);
            gens.push(Generator {
                family: Family::FlatSymmetric,
                poly: flat_symmetric_generator(field, &vars, b, &c.vector, &j)?,
                source: format!("{fl} {} J={}", c.vector, g.show(&j)),
            });
            pres.j_choice.push((f.flat.clone(), c.vector.clone(), j));
        }
        pres.basic_choice.push((f.flat.clone(), b.clone()));
    }
    Ok(pres)
}

/// The big ideal with the lexicographically smallest basic sets and
/// `J = {min Supp(X)}` under `ord`.
pub fn big_ideal_default<F: Field>(
    field: &F,
    m: &Com,
    ctx: &BigContext,
    ord: &TotalOrder,
) -> Result<IdealPresentation<F>> {
    let basic = ctx.default_basic_choice();
    big_ideal_generators(field, m, ctx, &basic, &|_, x| default_j(ord, x))
}
