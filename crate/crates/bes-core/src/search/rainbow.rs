//! Rainbow complete bipartite subgraphs of a colored link graph.
//!
//! In a linear tripartite host every class-1/class-2 pair lies in at most
//! one edge, so each link edge carries a unique class-3 vertex as its color.
//! A K_{s,t} in the link whose s*t colors are pairwise distinct lifts to an
//! embedding of the K_{s,t}-plus-apexes pattern back in the host.

use alloc::vec::Vec;

use crate::hypergraph::Hypergraph3;
use crate::search::partition::Tripartition;

pub struct LinkGraph {
    /// Host labels of the class playing the left side, ascending.
    pub left: Vec<u32>,
    /// Host labels of the class playing the right side, ascending.
    pub right: Vec<u32>,
    /// Per left index: sorted `(right index, color host label)` pairs.
    adj: Vec<Vec<(u32, u32)>>,
}

impl LinkGraph {
    pub fn color_of(&self, left_idx: u32, right_idx: u32) -> Option<u32> {
        let row = &self.adj[left_idx as usize];
        row.binary_search_by_key(&right_idx, |p| p.0)
            .ok()
            .map(|i| row[i].1)
    }
}

/// Projects the tripartite edges of `h` onto a bipartite link graph.
/// `roles` names the classes playing left, right, and color, in that order.
pub fn build_link(h: &Hypergraph3, part: &Tripartition, roles: [u8; 3]) -> LinkGraph {
    let left = part.classes[roles[0] as usize].clone();
    let right = part.classes[roles[1] as usize].clone();
    let mut adj: Vec<Vec<(u32, u32)>> = alloc::vec![Vec::new(); left.len()];
    for e in h.edges() {
        let mut by_role = [None, None, None];
        for &v in e.iter() {
            let c = part.color[v as usize];
            let r = roles
                .iter()
                .position(|&x| x == c)
                .expect("roles cover classes");
            if by_role[r].is_some() {
                by_role = [None, None, None];
                break;
            }
            by_role[r] = Some(v);
        }
        if let [Some(x), Some(y), Some(z)] = by_role {
            let li = left.binary_search(&x).expect("class member") as u32;
            let ri = right.binary_search(&y).expect("class member") as u32;
            adj[li as usize].push((ri, z));
        }
    }
    for row in adj.iter_mut() {
        row.sort_unstable();
        debug_assert!(row.windows(2).all(|w| w[0].0 != w[1].0), "host not linear");
    }
    LinkGraph { left, right, adj }
}

pub struct RainbowCopy {
    pub left: Vec<u32>,
    pub right: Vec<u32>,
    /// Row-major colors: entry `i*t + j` pairs `left[i]` with `right[j]`.
    pub colors: Vec<u32>,
}

impl RainbowCopy {
    /// Host images of the K_{s,t}-plus pattern vertices, in pattern label
    /// order: lefts, then rights, then apexes row-major.
    pub fn to_embedding(&self) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.left.len() + self.right.len() + self.colors.len());
        out.extend_from_slice(&self.left);
        out.extend_from_slice(&self.right);
        out.extend_from_slice(&self.colors);
        out
    }
}

struct Bt<'a> {
    link: &'a LinkGraph,
    s: usize,
    t: usize,
    cap: usize,
    budget: u64,
    nodes: u64,
    xs: Vec<u32>,
    ys: Vec<u32>,
    used_colors: Vec<u32>,
    out: Vec<RainbowCopy>,
}

/// Collects up to `cap` rainbow K_{s,t} copies in lexicographic order,
/// giving up quietly once `budget` search nodes have been expanded.
pub fn rainbow_ksts(link: &LinkGraph, s: u32, t: u32, cap: usize, budget: u64) -> Vec<RainbowCopy> {
    let s = s as usize;
    let t = t as usize;
    if link.left.len() < s || link.right.len() < t || cap == 0 {
        return Vec::new();
    }
    let mut bt = Bt {
        link,
        s,
        t,
        cap,
        budget,
        nodes: 0,
        xs: Vec::with_capacity(s),
        ys: Vec::with_capacity(t),
        used_colors: Vec::new(),
        out: Vec::new(),
    };
    bt.extend_x(0, &[]);
    bt.out
}

impl<'a> Bt<'a> {
    fn spent(&mut self) -> bool {
        self.nodes += 1;
        self.nodes > self.budget || self.out.len() >= self.cap
    }

    fn extend_x(&mut self, start: usize, common: &[u32]) {
        if self.spent() {
            return;
        }
        if self.xs.len() == self.s {
            self.choose_y(0, common);
            return;
        }
        let left_n = self.link.left.len();
        for x in start..left_n {
            if left_n - x < self.s - self.xs.len() {
                break;
            }
            let row: Vec<u32> = self.link.adj[x].iter().map(|p| p.0).collect();
            let next: Vec<u32> = if self.xs.is_empty() {
                row
            } else {
                intersect_sorted(common, &row)
            };
            if next.len() < self.t {
                continue;
            }
            self.xs.push(x as u32);
            self.extend_x(x + 1, &next);
            self.xs.pop();
            if self.out.len() >= self.cap || self.nodes > self.budget {
                return;
            }
        }
    }

    fn choose_y(&mut self, start: usize, common: &[u32]) {
        if self.spent() {
            return;
        }
        if self.ys.len() == self.t {
            self.emit();
            return;
        }
        for pos in start..common.len() {
            if common.len() - pos < self.t - self.ys.len() {
                break;
            }
            let y = common[pos];
            let mut col = Vec::with_capacity(self.s);
            let mut ok = true;
            for &x in &self.xs {
                let c = self.link.color_of(x, y).expect("y common to all xs");
                if col.contains(&c) || self.used_colors.contains(&c) {
                    ok = false;
                    break;
                }
                col.push(c);
            }
            if !ok {
                continue;
            }
            self.ys.push(y);
            self.used_colors.extend_from_slice(&col);
            self.choose_y(pos + 1, common);
            self.used_colors
                .truncate(self.used_colors.len() - col.len());
            self.ys.pop();
            if self.out.len() >= self.cap || self.nodes > self.budget {
                return;
            }
        }
    }

    fn emit(&mut self) {
        let left: Vec<u32> = self
            .xs
            .iter()
            .map(|&x| self.link.left[x as usize])
            .collect();
        let right: Vec<u32> = self
            .ys
            .iter()
            .map(|&y| self.link.right[y as usize])
            .collect();
        let mut colors = Vec::with_capacity(self.s * self.t);
        for &x in &self.xs {
            for &y in &self.ys {
                colors.push(self.link.color_of(x, y).expect("chosen pair"));
            }
        }
        self.out.push(RainbowCopy {
            left,
            right,
            colors,
        });
    }
}

fn intersect_sorted(a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut out = Vec::new();
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            core::cmp::Ordering::Less => i += 1,
            core::cmp::Ordering::Greater => j += 1,
            core::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}
