//! Small groups with fixed element names, used as fixtures and by the CLI.

use super::group::FiniteGroup;

/// `ℤ/n` with elements `e, a, a2, …`.
pub fn cyclic(n: usize) -> FiniteGroup {
    let names = (0..n)
        .map(|k| match k {
            0 => "e".to_string(),
            1 => "a".to_string(),
            _ => format!("a{k}"),
        })
        .collect();
    FiniteGroup::from_fn(names, |i, j| (i + j) % n).expect("cyclic group")
}

/// `S₃` as `e, (12), (13), (23), (123), (132)`, composing right to left.
pub fn symmetric3() -> FiniteGroup {
    permutation_group(vec![vec![0, 1, 2], vec![1, 0, 2], vec![2, 1, 0], vec![0, 2, 1], vec![1, 2, 0], vec![2, 0, 1]])
}

/// The even permutations of four points.
pub fn alternating4() -> FiniteGroup {
    let mut perms = Vec::new();
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                for d in 0..4 {
                    let p = vec![a, b, c, d];
                    let mut seen = [false; 4];
                    p.iter().for_each(|&i| seen[i] = true);
                    if seen.iter().all(|&s| s) && is_even(&p) {
                        perms.push(p);
                    }
                }
            }
        }
    }
    permutation_group(perms)
}

/// The dihedral group of order `2n`: `r^k s^f` is named `e, r, r2, …, s, rs, r2s, …`.
pub fn dihedral(n: usize) -> FiniteGroup {
    let name = |k: usize, f: usize| {
        let r = match k {
            0 => String::new(),
            1 => "r".into(),
            _ => format!("r{k}"),
        };
        match (r.is_empty(), f) {
            (true, 0) => "e".into(),
            (false, 0) => r,
            _ => format!("{r}s"),
        }
    };
    let names = (0..2 * n).map(|i| name(i % n, i / n)).collect();
    // (r^a s^f)(r^b s^g) = r^(a ± b) s^(f+g)
    FiniteGroup::from_fn(names, |i, j| {
        let (a, f) = (i % n, i / n);
        let (b, g) = (j % n, j / n);
        let k = if f == 0 { (a + b) % n } else { (a + n - b) % n };
        k + n * ((f + g) % 2)
    })
    .expect("dihedral group")
}

/// `ℤ/2 × ℤ/2` as `e, a, b, c`.
pub fn klein() -> FiniteGroup {
    let names = ["e", "a", "b", "c"].map(String::from).to_vec();
    FiniteGroup::from_fn(names, |i, j| i ^ j).expect("Klein group")
}

/// The quaternion group `±1, ±i, ±j, ±k`.
pub fn quaternion() -> FiniteGroup {
    let names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"].map(String::from).to_vec();
    // unit u in {1, i, j, k} = {0, 1, 2, 3}; element index = 2u + (negative as usize)
    let unit_mul = |u: usize, v: usize| -> (usize, bool) {
        match (u, v) {
            (0, v) => (v, false),
            (u, 0) => (u, false),
            (u, v) if u == v => (0, true),
            (1, 2) => (3, false),
            (2, 3) => (1, false),
            (3, 1) => (2, false),
            (2, 1) => (3, true),
            (3, 2) => (1, true),
            (1, 3) => (2, true),
            _ => unreachable!(),
        }
    };
    FiniteGroup::from_fn(names, |x, y| {
        let (w, neg) = unit_mul(x / 2, y / 2);
        2 * w + ((x % 2 + y % 2 + neg as usize) % 2)
    })
    .expect("quaternion group")
}

/// `G × H` with elements named `(g,h)`.
pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> FiniteGroup {
    let m = h.order();
    let names = (0..g.order() * m).map(|i| format!("({},{})", g.name(i / m), h.name(i % m))).collect();
    FiniteGroup::from_fn(names, |x, y| g.mul_idx(x / m, y / m) * m + h.mul_idx(x % m, y % m)).expect("direct product")
}

/// `ℤ/2, ℤ/3, ℤ/4, S₃, D₄`.
pub fn fixtures() -> Vec<FiniteGroup> {
    vec![cyclic(2), cyclic(3), cyclic(4), symmetric3(), dihedral(4)]
}

/// The fixtures plus every other catalog group of order at most 12.
pub fn small_groups() -> Vec<FiniteGroup> {
    let mut all = fixtures();
    all.extend([
        klein(),
        cyclic(5),
        cyclic(6),
        cyclic(7),
        quaternion(),
        direct_product(&cyclic(2), &cyclic(4)),
        direct_product(&klein(), &cyclic(2)),
        dihedral(5),
        direct_product(&cyclic(2), &symmetric3()),
        dihedral(6),
        alternating4(),
        cyclic(12),
    ]);
    all
}

/// Looks a catalog group up by name: `z<n>`, `s3`, `d<n>`, `klein`, `q8`, `a4`.
pub fn by_name(name: &str) -> Option<FiniteGroup> {
    match name {
        "s3" => Some(symmetric3()),
        "klein" | "v4" => Some(klein()),
        "q8" => Some(quaternion()),
        "a4" => Some(alternating4()),
        _ => {
            let mut chars = name.chars();
            let head = chars.next()?;
            let n: usize = chars.as_str().parse().ok().filter(|&n| n >= 1)?;
            match head {
                'z' if n <= 64 => Some(cyclic(n)),
                'd' if (3..=32).contains(&n) => Some(dihedral(n)),
                _ => None,
            }
        }
    }
}

fn permutation_group(perms: Vec<Vec<usize>>) -> FiniteGroup {
    let names = perms.iter().map(|p| cycle_notation(p)).collect();
    let compose = |i: usize, j: usize| {
        let (p, q) = (&perms[i], &perms[j]);
        let pq: Vec<usize> = (0..q.len()).map(|k| p[q[k]]).collect();
        perms.iter().position(|r| *r == pq).expect("closed under composition")
    };
    FiniteGroup::from_fn(names, compose).expect("permutation group")
}

fn cycle_notation(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        out.push('(');
        let mut k = start;
        while !seen[k] {
            seen[k] = true;
            out.push_str(&(k + 1).to_string());
            k = p[k];
        }
        out.push(')');
    }
    if out.is_empty() {
        "e".into()
    } else {
        out
    }
}

fn is_even(p: &[usize]) -> bool {
    let inversions =
        (0..p.len()).flat_map(|i| (i + 1..p.len()).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
    inversions % 2 == 0
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders_and_names() {
        let s3 = symmetric3();
        assert_eq!(s3.names(), ["e", "(12)", "(13)", "(23)", "(123)", "(132)"]);
        assert!(!s3.is_abelian());
        assert_eq!(dihedral(4).order(), 8);
        assert_eq!(dihedral(4).names()[5], "rs");
        assert!(!dihedral(4).is_abelian());
        assert_eq!(alternating4().order(), 12);
        assert!(!quaternion().is_abelian());
        assert_eq!(direct_product(&cyclic(2), &cyclic(3)).order(), 6);
        assert!(small_groups().iter().all(|g| g.order() <= 12));
    }

    #[test]
    fn s3_products_compose_right_to_left() {
        let g = symmetric3();
        let i = |n: &str| g.index_of(n).unwrap();
        // (12)(13): apply (13) first, 1→3→3, 3→1→2, 2→2→1
        assert_eq!(g.name(g.mul_idx(i("(12)"), i("(13)"))), "(132)");
        assert_eq!(g.name(g.mul_idx(i("(123)"), i("(123)"))), "(132)");
    }

    #[test]
    fn quaternion_relations() {
        let q = quaternion();
        let i = |n: &str| q.index_of(n).unwrap();
        assert_eq!(q.name(q.mul_idx(i("i"), i("j"))), "k");
        assert_eq!(q.name(q.mul_idx(i("j"), i("i"))), "-k");
        assert_eq!(q.name(q.mul_idx(i("k"), i("k"))), "-1");
    }

    #[test]
    fn lookup() {
        assert_eq!(by_name("z4").unwrap().order(), 4);
        assert_eq!(by_name("d4").unwrap().order(), 8);
        assert!(by_name("z0").is_none());
        assert!(by_name("x3").is_none());
        assert!(by_name("").is_none());
        assert!(by_name("z65").is_none());
    }
}
