use std::collections::BTreeMap;
use std::sync::OnceLock;

use proptest::prelude::*;

use pbzlab_core::axioms;
use pbzlab_core::canon::{canonical_form, is_isomorphic, is_isomorphism};
use pbzlab_core::enumerate::{enumerate, EnumerationSpec};
use pbzlab_core::format::{parse_algebra, print_algebra};
use pbzlab_core::terms::{self, eval, holds, parse_identity, parse_term, theory, Identity, Term};
use pbzlab_core::{catalog, Element, FiniteAlgebra, RawAlgebra};

/// Catalog algebras plus every BZ-lattice with at most six elements.
fn pool() -> &'static [FiniteAlgebra] {
    static POOL: OnceLock<Vec<FiniteAlgebra>> = OnceLock::new();
    POOL.get_or_init(|| {
        let mut v: Vec<FiniteAlgebra> = catalog::entries().into_iter().map(|e| e.algebra).collect();
        v.extend(enumerate(&EnumerationSpec::new(6)).unwrap());
        v
    })
}

fn small_pool() -> Vec<&'static FiniteAlgebra> {
    pool().iter().filter(|a| a.size() <= 8).collect()
}

fn term() -> impl Strategy<Value = Term> {
    let leaf = prop_oneof![
        4 => prop::sample::select(vec!["x", "y", "z"]).prop_map(Term::var),
        1 => Just(Term::Zero),
        1 => Just(Term::One),
    ];
    leaf.prop_recursive(5, 32, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Term::meet(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Term::join(a, b)),
            inner.clone().prop_map(Term::kleene),
            inner.prop_map(Term::brouwer),
        ]
    })
}

/// Structural evaluation straight from the algebra's operations.
fn direct(a: &FiniteAlgebra, t: &Term, env: &BTreeMap<String, Element>) -> Element {
    match t {
        Term::Var(v) => env[v],
        Term::Zero => a.zero(),
        Term::One => a.one(),
        Term::Meet(s, u) => a.meet(direct(a, s, env), direct(a, u, env)),
        Term::Join(s, u) => a.join(direct(a, s, env), direct(a, u, env)),
        Term::Kleene(s) => a.kleene(direct(a, s, env)),
        Term::Brouwer(s) => a.brouwer(direct(a, s, env)),
    }
}

fn permuted(a: &FiniteAlgebra, perm: &[usize]) -> FiniteAlgebra {
    let n = a.size();
    let mut inv = vec![0; n];
    for (old, &new) in perm.iter().enumerate() {
        inv[new] = old;
    }
    let e = Element::new;
    let raw = RawAlgebra {
        name: format!("{}*", a.name()),
        labels: (0..n).map(|i| a.label(e(inv[i])).to_string()).collect(),
        leq: (0..n).map(|i| (0..n).map(|j| a.leq(e(inv[i]), e(inv[j]))).collect()).collect(),
        kleene: (0..n).map(|i| perm[a.kleene(e(inv[i])).index()]).collect(),
        brouwer: (0..n).map(|i| perm[a.brouwer(e(inv[i])).index()]).collect(),
        zero: perm[a.zero().index()],
        one: perm[a.one().index()],
    };
    FiniteAlgebra::new(raw).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn printed_terms_parse_back(t in term()) {
        let text = t.to_string();
        prop_assert_eq!(parse_term(&text).unwrap(), t);
    }

    #[test]
    fn printed_identities_parse_back(s in term(), t in term(), ineq in any::<bool>()) {
        let i = if ineq { Identity::inequality(s, t) } else { Identity::equation(s, t) };
        prop_assert_eq!(parse_identity(&i.to_string()).unwrap(), i);
    }

    #[test]
    fn evaluator_matches_direct_recursion(
        t in term(),
        idx in any::<prop::sample::Index>(),
        vals in prop::collection::vec(any::<prop::sample::Index>(), 3),
    ) {
        let a = idx.get(pool());
        let env: BTreeMap<String, Element> = ["x", "y", "z"]
            .iter()
            .zip(&vals)
            .map(|(v, i)| (v.to_string(), Element::new(i.index(a.size()))))
            .collect();
        prop_assert_eq!(eval(a, &t, &env).unwrap(), direct(a, &t, &env));
    }

    #[test]
    fn inequality_matches_its_encoding(s in term(), t in term(), idx in any::<prop::sample::Index>()) {
        let a = *idx.get(&small_pool());
        let ineq = holds(a, &Identity::inequality(s.clone(), t.clone())).is_ok();
        let enc = holds(a, &Identity::equation(Term::meet(s.clone(), t), s)).is_ok();
        prop_assert_eq!(ineq, enc);
    }

    #[test]
    fn lattice_laws(idx in any::<prop::sample::Index>(), xs in prop::collection::vec(any::<prop::sample::Index>(), 3)) {
        let a = idx.get(pool());
        let [x, y, z] = [0, 1, 2].map(|i| Element::new(xs[i].index(a.size())));
        prop_assert_eq!(a.meet(x, y), a.meet(y, x));
        prop_assert_eq!(a.join(x, y), a.join(y, x));
        prop_assert_eq!(a.meet(x, a.meet(y, z)), a.meet(a.meet(x, y), z));
        prop_assert_eq!(a.join(x, a.join(y, z)), a.join(a.join(x, y), z));
        prop_assert_eq!(a.meet(x, a.join(x, y)), x);
        prop_assert_eq!(a.join(x, a.meet(x, y)), x);
        prop_assert_eq!(a.leq(x, y), a.meet(x, y) == x);
        prop_assert_eq!(a.kleene(a.kleene(x)), x);
        prop_assert_eq!(a.leq(x, y), a.leq(a.kleene(y), a.kleene(x)));
    }

    #[test]
    fn canonical_form_ignores_element_order(idx in any::<prop::sample::Index>(), seed in any::<u64>()) {
        let a = idx.get(pool());
        let n = a.size();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let b = permuted(a, &perm);
        prop_assert_eq!(canonical_form(a), canonical_form(&b));
        let map = is_isomorphic(a, &b).unwrap();
        prop_assert!(is_isomorphism(a, &b, &map));
    }

    #[test]
    fn printed_algebras_parse_back(idx in any::<prop::sample::Index>()) {
        let a = idx.get(pool());
        prop_assert_eq!(&parse_algebra(&print_algebra(a)).unwrap(), a);
    }
}

fn law(a: &FiniteAlgebra, name: &str) -> bool {
    terms::holds_statement(a, &theory::get(name).unwrap()).is_ok()
}

#[test]
fn identities_agree_with_class_checks() {
    for a in pool() {
        let pk = axioms::is_pseudo_kleene(a).holds();
        assert_eq!(law(a, "PK"), pk, "{}", a.name());
        assert_eq!(pk && ["BZ1", "BZ2", "BZ3", "BZ4"].iter().all(|l| law(a, l)), axioms::is_bz(a).holds(), "{}", a.name());
        assert_eq!(law(a, "STAR"), axioms::star_condition(a).holds(), "{}", a.name());
        assert_eq!(law(a, "DIAMOND_OM"), axioms::diamond_orthomodular_condition(a).holds(), "{}", a.name());
        assert_eq!(law(a, "DIST"), a.is_distributive(), "{}", a.name());
        assert_eq!(law(a, "POM"), axioms::is_paraorthomodular(a).holds(), "{}", a.name());
        assert_eq!(pk && law(a, "ORTHO"), axioms::is_ortholattice(a).holds(), "{}", a.name());
        assert_eq!(pk && law(a, "ORTHO") && law(a, "OM"), axioms::is_orthomodular(a).holds(), "{}", a.name());
    }
}

#[test]
fn enumerated_algebras_are_valid_bz_lattices() {
    for a in pool().iter().filter(|a| a.name().starts_with('E')) {
        assert!(pbzlab_core::validate(&a.to_raw()).unwrap().ok, "{}", a.name());
        assert!(axioms::is_bz(a).holds(), "{}", a.name());
    }
}
