//! Finite groups realised by their multiplication tables.
//!
//! Every structural query (inverses, conjugacy classes, centralizers,
//! quotients) is answered by exhaustion over the table. Target orders are at
//! most 64, so all checks are exact and cheap.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{Error, Result};

pub const MAX_ORDER: usize = 128;

#[derive(Clone, PartialEq, Eq)]
pub struct Group {
    name: String,
    order: usize,
    table: Vec<usize>,
    inverse: Vec<usize>,
    identity: usize,
    labels: Vec<String>,
}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Group({}, order {})", self.name, self.order)
    }
}

impl Group {
    /// Builds a group from a row-major table, checking the group laws
    /// exhaustively. The identity is located from the table.
    pub fn from_table(name: impl Into<String>, order: usize, table: Vec<usize>) -> Result<Self> {
        let name = name.into();
        if order == 0 {
            return Err(Error::InvalidGroup("order must be positive".into()));
        }
        if order > MAX_ORDER {
            return Err(Error::InvalidGroup(format!("order {order} exceeds {MAX_ORDER}")));
        }
        if table.len() != order * order {
            return Err(Error::InvalidGroup(format!(
                "table has {} entries, expected {}",
                table.len(),
                order * order
            )));
        }
        if let Some(bad) = table.iter().find(|&&v| v >= order) {
            return Err(Error::InvalidGroup(format!("table entry {bad} out of range")));
        }
        let mul = |a: usize, b: usize| table[a * order + b];
        let identity = (0..order)
            .find(|&e| (0..order).all(|x| mul(e, x) == x && mul(x, e) == x))
            .ok_or_else(|| Error::InvalidGroup("no identity element".into()))?;
        let mut inverse = vec![usize::MAX; order];
        for a in 0..order {
            match (0..order).find(|&b| mul(a, b) == identity && mul(b, a) == identity) {
                Some(b) => inverse[a] = b,
                None => return Err(Error::InvalidGroup(format!("element {a} has no inverse"))),
            }
        }
        for a in 0..order {
            for b in 0..order {
                let ab = mul(a, b);
                for c in 0..order {
                    if mul(ab, c) != mul(a, mul(b, c)) {
                        return Err(Error::InvalidGroup(format!(
                            "associativity fails at ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        let labels = (0..order).map(|i| i.to_string()).collect();
        Ok(Group { name, order, table, inverse, identity, labels })
    }

    /// Builds a group from an element list and a multiplication closure.
    fn from_elements<T: PartialEq + fmt::Debug>(
        name: impl Into<String>,
        elements: &[T],
        op: impl Fn(&T, &T) -> T,
        label: impl Fn(&T) -> String,
    ) -> Result<Self> {
        let n = elements.len();
        let mut table = Vec::with_capacity(n * n);
        for a in elements {
            for b in elements {
                let c = op(a, b);
                let idx = elements
                    .iter()
                    .position(|e| *e == c)
                    .ok_or_else(|| Error::InvalidGroup(format!("product {c:?} not closed")))?;
                table.push(idx);
            }
        }
        let mut g = Group::from_table(name, n, table)?;
        g.labels = elements.iter().map(label).collect();
        Ok(g)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.order);
        self.labels = labels;
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    /// `k a k⁻¹`
    #[inline]
    pub fn conj(&self, k: usize, a: usize) -> usize {
        self.mul(self.mul(k, a), self.inverse[k])
    }

    #[inline]
    pub fn commutes(&self, a: usize, b: usize) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..a).all(|b| self.commutes(a, b)))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut n = 1;
        while x != self.identity {
            x = self.mul(x, a);
            n += 1;
        }
        n
    }

    pub fn exponent(&self) -> usize {
        self.elements().map(|a| self.element_order(a)).fold(1, lcm)
    }

    pub fn center(&self) -> Vec<usize> {
        self.elements()
            .filter(|&z| self.elements().all(|x| self.commutes(z, x)))
            .collect()
    }

    pub fn centralizer_elements(&self, g: usize) -> Vec<usize> {
        self.elements().filter(|&x| self.commutes(x, g)).collect()
    }

    /// Re-checks associativity, identity and inverse laws, returning the first
    /// failing triple if any.
    pub fn check_laws(&self) -> std::result::Result<(), (usize, usize, usize)> {
        let e = self.identity;
        for a in self.elements() {
            if self.mul(e, a) != a || self.mul(a, e) != a {
                return Err((e, a, a));
            }
            if self.mul(a, self.inv(a)) != e {
                return Err((a, self.inv(a), e));
            }
            for b in self.elements() {
                for c in self.elements() {
                    if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                        return Err((a, b, c));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn conjugacy(&self) -> ConjugacyData {
        let n = self.order;
        let mut class_of = vec![usize::MAX; n];
        let mut witness = vec![usize::MAX; n];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for rep in 0..n {
            if class_of[rep] != usize::MAX {
                continue;
            }
            let id = classes.len();
            let mut members = Vec::new();
            for k in 0..n {
                let c = self.conj(k, rep);
                if class_of[c] == usize::MAX {
                    class_of[c] = id;
                    witness[c] = k;
                    members.push(c);
                }
            }
            members.sort_unstable();
            classes.push(members);
        }
        let representatives = classes.iter().map(|c| c[0]).collect();
        ConjugacyData { classes, representatives, class_of, witness }
    }

    pub fn is_subgroup(&self, elements: &[usize]) -> bool {
        elements.contains(&self.identity)
            && elements.iter().all(|&a| elements.contains(&self.inv(a)))
            && elements
                .iter()
                .all(|&a| elements.iter().all(|&b| elements.contains(&self.mul(a, b))))
    }

    pub fn is_normal(&self, elements: &[usize]) -> bool {
        self.is_subgroup(elements)
            && elements
                .iter()
                .all(|&a| self.elements().all(|k| elements.contains(&self.conj(k, a))))
    }

    /// Quotient by a normal subgroup. Cosets are labelled by their
    /// minimal-index element; the second component maps each element of `self`
    /// to its coset index in the quotient.
    pub fn quotient(&self, normal: &[usize]) -> Result<(Group, Vec<usize>)> {
        if !self.is_normal(normal) {
            return Err(Error::InvalidGroup("quotient by a non-normal subset".into()));
        }
        let mut coset_of = vec![usize::MAX; self.order];
        let mut reps = Vec::new();
        for x in self.elements() {
            if coset_of[x] != usize::MAX {
                continue;
            }
            for &k in normal {
                coset_of[self.mul(x, k)] = reps.len();
            }
            reps.push(x);
        }
        let m = reps.len();
        let mut table = Vec::with_capacity(m * m);
        for &a in &reps {
            for &b in &reps {
                table.push(coset_of[self.mul(a, b)]);
            }
        }
        let labels = reps.iter().map(|&r| format!("{}K", self.label(r))).collect();
        let q = Group::from_table(format!("{}/K", self.name), m, table)?.with_labels(labels);
        Ok((q, coset_of))
    }

    pub fn direct_product(a: &Group, b: &Group) -> Result<Group> {
        let (n, m) = (a.order, b.order);
        let mut table = Vec::with_capacity(n * m * n * m);
        for x in 0..n * m {
            for y in 0..n * m {
                let (x1, x2) = (x / m, x % m);
                let (y1, y2) = (y / m, y % m);
                table.push(a.mul(x1, y1) * m + b.mul(x2, y2));
            }
        }
        let labels = (0..n * m)
            .map(|x| format!("({},{})", a.label(x / m), b.label(x % m)))
            .collect();
        Ok(Group::from_table(format!("{}x{}", a.name, b.name), n * m, table)?.with_labels(labels))
    }

    pub fn trivial() -> Group {
        Group::cyclic(1).expect("trivial group")
    }

    pub fn cyclic(n: usize) -> Result<Group> {
        Group::abelian(&[n]).map(|g| g.renamed(format!("Z{n}")))
    }

    /// `Z_{m_1} × … × Z_{m_k}`; element index is the mixed-radix number with
    /// the first coordinate most significant.
    pub fn abelian(moduli: &[usize]) -> Result<Group> {
        if moduli.iter().any(|&m| m == 0) {
            return Err(Error::InvalidGroup("cyclic factor of order 0".into()));
        }
        let order: usize = moduli.iter().product();
        let mut table = Vec::with_capacity(order * order);
        for a in 0..order {
            let ca = mixed_radix(a, moduli);
            for b in 0..order {
                let cb = mixed_radix(b, moduli);
                let sum: Vec<usize> =
                    ca.iter().zip(&cb).zip(moduli).map(|((x, y), m)| (x + y) % m).collect();
                table.push(from_mixed_radix(&sum, moduli));
            }
        }
        let name = moduli.iter().map(|m| format!("Z{m}")).collect::<Vec<_>>().join("x");
        let labels = (0..order)
            .map(|a| {
                let c = mixed_radix(a, moduli);
                format!("({})", c.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(","))
            })
            .collect();
        Ok(Group::from_table(name, order, table)?.with_labels(labels))
    }

    pub fn elementary_abelian(p: usize, n: usize) -> Result<Group> {
        Group::abelian(&vec![p; n]).map(|g| g.renamed(format!("Z{p}^{n}")))
    }

    /// Dihedral group of order `2n`: element `r^i s^j` has index `i + n j`.
    pub fn dihedral(n: usize) -> Result<Group> {
        if n < 1 {
            return Err(Error::InvalidGroup("dihedral needs n >= 1".into()));
        }
        let elements: Vec<(usize, usize)> =
            (0..2).flat_map(|j| (0..n).map(move |i| (i, j))).collect();
        // (r^a s^b)(r^c s^d) = r^{a + (-1)^b c} s^{b+d}
        let op = |x: &(usize, usize), y: &(usize, usize)| {
            let c = if x.1 == 0 { y.0 } else { (n - y.0) % n };
            ((x.0 + c) % n, (x.1 + y.1) % 2)
        };
        let label = |x: &(usize, usize)| match *x {
            (0, 0) => "e".to_string(),
            (i, 0) => format!("r{i}"),
            (0, 1) => "s".to_string(),
            (i, _) => format!("r{i}s"),
        };
        Group::from_elements(format!("D{}", 2 * n), &elements, op, label)
    }

    /// Quaternion group `Q8` as unit quaternions `±1, ±i, ±j, ±k`.
    /// Index `2u + s` where `u ∈ {1, i, j, k}` and `s` is the sign bit.
    pub fn quaternion() -> Result<Group> {
        // unit products: (u, v) -> (w, negate)
        let unit_mul = |u: usize, v: usize| -> (usize, usize) {
            match (u, v) {
                (0, x) | (x, 0) => (x, 0),
                (a, b) if a == b => (0, 1),
                (1, 2) => (3, 0),
                (2, 3) => (1, 0),
                (3, 1) => (2, 0),
                (2, 1) => (3, 1),
                (3, 2) => (1, 1),
                (1, 3) => (2, 1),
                _ => unreachable!(),
            }
        };
        let elements: Vec<(usize, usize)> =
            (0..4).flat_map(|u| (0..2).map(move |s| (u, s))).collect();
        let op = |x: &(usize, usize), y: &(usize, usize)| {
            let (w, s) = unit_mul(x.0, y.0);
            (w, (x.1 + y.1 + s) % 2)
        };
        let label = |x: &(usize, usize)| {
            let u = ["1", "i", "j", "k"][x.0];
            if x.1 == 0 { u.to_string() } else { format!("-{u}") }
        };
        Group::from_elements("Q8", &elements, op, label)
    }

    /// Symmetric group on `n ≤ 5` letters; permutations in lexicographic
    /// order, so the identity has index 0. Product is composition `(στ)(i) =
    /// σ(τ(i))`.
    pub fn symmetric(n: usize) -> Result<Group> {
        if n == 0 || n > 5 {
            return Err(Error::InvalidGroup("symmetric group needs 1 <= n <= 5".into()));
        }
        let perms = permutations(n);
        let op = |s: &Vec<usize>, t: &Vec<usize>| t.iter().map(|&i| s[i]).collect::<Vec<_>>();
        let label = |p: &Vec<usize>| {
            format!("[{}]", p.iter().map(|v| (v + 1).to_string()).collect::<String>())
        };
        Group::from_elements(format!("S{n}"), &perms, op, label)
    }

    /// Extra-special group of order `p³` and exponent `p` (odd prime `p`),
    /// realised as the Heisenberg group `(a, b, c)(a', b', c') = (a + a',
    /// b + b', c + c' + a b')`. Index `a p² + b p + c`; the center is the
    /// `c`-axis.
    pub fn extraspecial(p: usize) -> Result<Group> {
        if p == 2 || !is_prime(p) {
            return Err(Error::InvalidDescriptor(
                format!("extraspecial:{p}"),
                "exponent-p extra-special groups need an odd prime p".into(),
            ));
        }
        let elements: Vec<[usize; 3]> = (0..p * p * p)
            .map(|i| [i / (p * p), (i / p) % p, i % p])
            .collect();
        let op = |x: &[usize; 3], y: &[usize; 3]| {
            [(x[0] + y[0]) % p, (x[1] + y[1]) % p, (x[2] + y[2] + x[0] * y[1]) % p]
        };
        let label = |x: &[usize; 3]| format!("({},{},{})", x[0], x[1], x[2]);
        Group::from_elements(format!("H{}", p * p * p), &elements, op, label)
    }

    /// Same order and multiplication table (names and labels ignored).
    pub fn same_table(&self, other: &Group) -> bool {
        self.order == other.order && self.table == other.table
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }
}

/// Conjugacy classes with deterministic minimal-index representatives and a
/// conjugating witness for every element.
#[derive(Clone, Debug)]
pub struct ConjugacyData {
    pub classes: Vec<Vec<usize>>,
    pub representatives: Vec<usize>,
    pub class_of: Vec<usize>,
    /// `witness[a] = k` with `k · rep(a) · k⁻¹ = a`.
    pub witness: Vec<usize>,
}

impl ConjugacyData {
    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn representative_of(&self, a: usize) -> usize {
        self.representatives[self.class_of[a]]
    }

    pub fn is_representative(&self, a: usize) -> bool {
        self.representative_of(a) == a
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        self.classes.iter().map(Vec::len).collect()
    }
}

/// A subgroup `K ≤ H` together with its own table (elements renumbered in
/// increasing parent order) and a minimal-index left transversal.
#[derive(Clone, Debug)]
pub struct Subgroup {
    parent: Arc<Group>,
    group: Arc<Group>,
    elements: Vec<usize>,
    position: Vec<Option<usize>>,
    transversal: Vec<usize>,
    coset_of: Vec<usize>,
}

impl Subgroup {
    pub fn new(parent: Arc<Group>, mut elements: Vec<usize>) -> Result<Self> {
        elements.sort_unstable();
        elements.dedup();
        if !parent.is_subgroup(&elements) {
            return Err(Error::InvalidGroup("element set is not a subgroup".into()));
        }
        let mut position = vec![None; parent.order()];
        for (i, &x) in elements.iter().enumerate() {
            position[x] = Some(i);
        }
        let m = elements.len();
        let mut table = Vec::with_capacity(m * m);
        for &a in &elements {
            for &b in &elements {
                table.push(position[parent.mul(a, b)].expect("closed"));
            }
        }
        let labels = elements.iter().map(|&x| parent.label(x).to_string()).collect();
        let group = Group::from_table(format!("{}<", parent.name()), m, table)?.with_labels(labels);

        let mut coset_of = vec![usize::MAX; parent.order()];
        let mut transversal = Vec::new();
        for x in parent.elements() {
            if coset_of[x] != usize::MAX {
                continue;
            }
            for &k in &elements {
                coset_of[parent.mul(x, k)] = transversal.len();
            }
            transversal.push(x);
        }
        Ok(Subgroup { parent, group: Arc::new(group), elements, position, transversal, coset_of })
    }

    pub fn whole(parent: Arc<Group>) -> Self {
        let all = parent.elements().collect();
        Subgroup::new(parent, all).expect("whole group")
    }

    pub fn centralizer(parent: Arc<Group>, g: usize) -> Self {
        let elems = parent.centralizer_elements(g);
        Subgroup::new(parent, elems).expect("centralizer is a subgroup")
    }

    pub fn parent(&self) -> &Arc<Group> {
        &self.parent
    }

    /// The subgroup as a group in its own right (local indexing).
    pub fn group(&self) -> &Arc<Group> {
        &self.group
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn index(&self) -> usize {
        self.transversal.len()
    }

    /// Parent index of local element `i`.
    pub fn embed(&self, i: usize) -> usize {
        self.elements[i]
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    /// Local index of a parent element, if it lies in the subgroup.
    pub fn local(&self, x: usize) -> Option<usize> {
        self.position[x]
    }

    pub fn contains(&self, x: usize) -> bool {
        self.position[x].is_some()
    }

    pub fn transversal(&self) -> &[usize] {
        &self.transversal
    }

    /// Writes a parent element as `y = x_s · r`, returning `(s, local r)`.
    pub fn coset_decompose(&self, y: usize) -> (usize, usize) {
        let s = self.coset_of[y];
        let r = self.parent.mul(self.parent.inv(self.transversal[s]), y);
        (s, self.position[r].expect("coset decomposition"))
    }
}

/// The character group of a finite abelian group. Characters take values in
/// the `exponent`-th roots of unity and are stored as exponent vectors.
#[derive(Clone, Debug)]
pub struct DualGroup {
    pub group: Group,
    pub exponent: usize,
    /// `characters[i][k]`: exponent of `χ_i(k)` in `ζ_exponent`.
    pub characters: Vec<Vec<usize>>,
}

pub fn dual_group(k: &Group) -> Result<DualGroup> {
    if !k.is_abelian() {
        return Err(Error::InvalidGroup(format!("{} is not abelian", k.name())));
    }
    let e = k.exponent();
    // greedy generating set
    let mut gens = Vec::new();
    let mut span = vec![k.identity()];
    for x in k.elements() {
        if !span.contains(&x) {
            gens.push(x);
            span = closure(k, &gens);
        }
    }
    let mut characters = Vec::new();
    let combos = e.pow(gens.len() as u32);
    'outer: for code in 0..combos {
        let vals: Vec<usize> = (0..gens.len()).map(|i| (code / e.pow(i as u32)) % e).collect();
        let mut chi = vec![usize::MAX; k.order()];
        chi[k.identity()] = 0;
        let mut frontier = vec![k.identity()];
        while let Some(x) = frontier.pop() {
            for (gi, &g) in gens.iter().enumerate() {
                let y = k.mul(x, g);
                let v = (chi[x] + vals[gi]) % e;
                if chi[y] == usize::MAX {
                    chi[y] = v;
                    frontier.push(y);
                } else if chi[y] != v {
                    continue 'outer;
                }
            }
        }
        // homomorphism check
        for a in k.elements() {
            for b in k.elements() {
                if chi[k.mul(a, b)] != (chi[a] + chi[b]) % e {
                    continue 'outer;
                }
            }
        }
        characters.push(chi);
    }
    let m = characters.len();
    let mut table = Vec::with_capacity(m * m);
    for a in &characters {
        for b in &characters {
            let prod: Vec<usize> = a.iter().zip(b).map(|(x, y)| (x + y) % e).collect();
            table.push(characters.iter().position(|c| *c == prod).expect("closed under product"));
        }
    }
    let group = Group::from_table(format!("dual({})", k.name()), m, table)?;
    Ok(DualGroup { group, exponent: e, characters })
}

fn closure(g: &Group, gens: &[usize]) -> Vec<usize> {
    let mut span = vec![g.identity()];
    let mut i = 0;
    while i < span.len() {
        let x = span[i];
        for &s in gens {
            let y = g.mul(x, s);
            if !span.contains(&y) {
                span.push(y);
            }
        }
        i += 1;
    }
    span
}

/// Group descriptors accepted by the CLI and the catalog, e.g. `cyclic:4`,
/// `elementary:3:3`, `abelian:2,4`, `dihedral:4`, `quaternion`,
/// `symmetric:3`, `extraspecial:3`, `product(cyclic:2;symmetric:3)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    Cyclic(usize),
    Elementary { p: usize, n: usize },
    Abelian(Vec<usize>),
    Dihedral(usize),
    Quaternion,
    Symmetric(usize),
    Extraspecial(usize),
    Product(Box<GroupSpec>, Box<GroupSpec>),
}

impl GroupSpec {
    pub fn build(&self) -> Result<Group> {
        match self {
            GroupSpec::Cyclic(n) => Group::cyclic(*n),
            GroupSpec::Elementary { p, n } => Group::elementary_abelian(*p, *n),
            GroupSpec::Abelian(m) => Group::abelian(m),
            GroupSpec::Dihedral(n) => Group::dihedral(*n),
            GroupSpec::Quaternion => Group::quaternion(),
            GroupSpec::Symmetric(n) => Group::symmetric(*n),
            GroupSpec::Extraspecial(p) => Group::extraspecial(*p),
            GroupSpec::Product(a, b) => Group::direct_product(&a.build()?, &b.build()?),
        }
    }
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = |msg: &str| Error::InvalidDescriptor(s.to_string(), msg.to_string());
        if let Some(inner) = s.strip_prefix("product(").and_then(|r| r.strip_suffix(')')) {
            let mut depth = 0usize;
            let split = inner
                .char_indices()
                .find(|&(_, c)| {
                    match c {
                        '(' => depth += 1,
                        ')' => depth = depth.saturating_sub(1),
                        _ => {}
                    }
                    c == ';' && depth == 0
                })
                .map(|(i, _)| i)
                .ok_or_else(|| bad("product needs two factors separated by ';'"))?;
            let a: GroupSpec = inner[..split].parse()?;
            let b: GroupSpec = inner[split + 1..].parse()?;
            return Ok(GroupSpec::Product(Box::new(a), Box::new(b)));
        }
        let mut parts = s.split(':');
        let kind = parts.next().unwrap_or_default();
        let args: Vec<&str> = parts.collect();
        let num = |i: usize| -> Result<usize> {
            args.get(i)
                .ok_or_else(|| bad("missing parameter"))?
                .parse::<usize>()
                .map_err(|_| bad("parameter is not a positive integer"))
        };
        let spec = match kind {
            "cyclic" => GroupSpec::Cyclic(num(0)?),
            "elementary" => GroupSpec::Elementary { p: num(0)?, n: num(1)? },
            "abelian" => GroupSpec::Abelian(
                args.first()
                    .ok_or_else(|| bad("missing moduli"))?
                    .split(',')
                    .map(|v| v.parse().map_err(|_| bad("bad modulus")))
                    .collect::<Result<_>>()?,
            ),
            "dihedral" => GroupSpec::Dihedral(num(0)?),
            "quaternion" => GroupSpec::Quaternion,
            "symmetric" => GroupSpec::Symmetric(num(0)?),
            "extraspecial" => {
                let p = num(0)?;
                if p == 2 || !is_prime(p) {
                    return Err(bad("exponent-p extra-special groups need an odd prime p"));
                }
                GroupSpec::Extraspecial(p)
            }
            _ => return Err(bad("unknown group family")),
        };
        if let GroupSpec::Elementary { p, .. } = spec {
            if p < 2 {
                return Err(bad("p must be at least 2"));
            }
        }
        Ok(spec)
    }
}

pub fn build_group(descriptor: &str) -> Result<Group> {
    descriptor.parse::<GroupSpec>()?.build()
}

pub fn mixed_radix(mut a: usize, moduli: &[usize]) -> Vec<usize> {
    let mut out = vec![0; moduli.len()];
    for i in (0..moduli.len()).rev() {
        out[i] = a % moduli[i];
        a /= moduli[i];
    }
    out
}

pub fn from_mixed_radix(coords: &[usize], moduli: &[usize]) -> usize {
    coords.iter().zip(moduli).fold(0, |acc, (c, m)| acc * m + c)
}

pub fn is_prime(p: usize) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

pub fn gcd(a: usize, b: usize) -> usize {
    if b == 0 { a } else { gcd(b, a % b) }
}

pub fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, n: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for v in 0..n {
            if !prefix.contains(&v) {
                prefix.push(v);
                rec(prefix, n, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), n, &mut out);
    out
}

/// Parity of a permutation of `S_n` as built by [`Group::symmetric`].
pub fn permutation_sign(n: usize, index: usize) -> usize {
    let p = &permutations(n)[index];
    let mut inversions = 0;
    for i in 0..n {
        for j in i + 1..n {
            if p[i] > p[j] {
                inversions += 1;
            }
        }
    }
    inversions % 2
}
