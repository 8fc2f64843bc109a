use std::cell::OnceCell;
use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::bspace::{build_b, build_b2, phi, BComplex, PhiMap};
use crate::chroma::{enumerate_colorings, ColoringPartition};
use crate::complexes::{build_600_cell, icosahedron, quotient, Complex, Quotient};
use crate::error::{Error, Result};
use crate::golden::{
    alt_order5_element, find_24cell_subgroup, icosian_group, pick_order5_element,
    standard_generators, DoubleCosetGrid, IcosianGroup,
};
use crate::latin::{
    decompose, enumerate_latin_squares, s5_complex, Decomposition, Permutation,
    PermutationLabeling, SquareSimplex,
};

/// Which of the two admissible choices of `p` and `τ` to use.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Choices {
    pub alt_p: bool,
    pub alt_tau: bool,
}

impl Choices {
    pub fn flipped(self) -> Choices {
        Choices {
            alt_p: !self.alt_p,
            alt_tau: !self.alt_tau,
        }
    }
}

const CACHED_STAGES: [&str; 3] = ["600cell", "colorings_600cell", "colorings_B"];

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunManifest {
    pub version: String,
    pub generators: Vec<String>,
    pub t: Vec<String>,
    pub p: String,
    pub alt_p: bool,
    pub tau: Permutation,
    pub alt_tau: bool,
    pub group_hash: String,
    /// Stage name -> cache file relative to the output directory.
    pub cache_files: BTreeMap<String, String>,
}

impl RunManifest {
    /// Hash of everything except the cache paths themselves.
    pub fn key(&self) -> String {
        let mut bare = self.clone();
        bare.cache_files.clear();
        let bytes = serde_json::to_vec(&bare).expect("manifest serializes");
        hex::encode(Sha256::digest(bytes))[..16].to_string()
    }
}

struct Cache {
    dir: PathBuf,
}

impl Cache {
    fn load<T>(&self, name: &str, decode: impl Fn(&str) -> Result<T>) -> Option<T> {
        let text = fs::read_to_string(self.dir.join(format!("{name}.json"))).ok()?;
        decode(&text).ok()
    }

    fn store(&self, name: &str, text: &str) -> Result<()> {
        fs::create_dir_all(&self.dir)?;
        let tmp = self.dir.join(format!("{name}.json.tmp"));
        fs::write(&tmp, text)?;
        fs::rename(tmp, self.dir.join(format!("{name}.json")))?;
        Ok(())
    }
}

type Cell<T> = OnceCell<std::result::Result<T, String>>;

fn lazy<T>(cell: &Cell<T>, f: impl FnOnce() -> Result<T>) -> Result<&T> {
    cell.get_or_init(|| f().map_err(|e| e.to_string()))
        .as_ref()
        .map_err(|e| Error::Stage(e.clone()))
}

/// Every intermediate object of the pipeline, computed on first use.
pub struct Stages {
    pub choices: Choices,
    pub group: IcosianGroup,
    pub t: Vec<usize>,
    pub p: usize,
    pub tau: Permutation,
    pub manifest: RunManifest,
    cache: Option<Cache>,
    x: Cell<Complex>,
    colorings: Cell<Vec<ColoringPartition>>,
    b: Cell<BComplex>,
    b2: Cell<BComplex>,
    phi: Cell<PhiMap>,
    involution: Cell<Vec<usize>>,
    quotient: Cell<Quotient>,
    labeling: Cell<PermutationLabeling>,
    squares: Cell<Vec<SquareSimplex>>,
    s5: Cell<Complex>,
    decomposition: Cell<Decomposition>,
    icosahedron_b2: Cell<(BComplex, BComplex)>,
}

impl Stages {
    /// `out_dir` enables the on-disk stage cache under `out_dir/cache`.
    pub fn new(choices: Choices, out_dir: Option<&Path>) -> Result<Self> {
        let group = icosian_group()?;
        let t = find_24cell_subgroup(&group)?;
        let base_p = pick_order5_element(&group, &t)?;
        let p = if choices.alt_p {
            alt_order5_element(&group, &t, base_p)?
        } else {
            base_p
        };
        let tau = if choices.alt_tau {
            Permutation::cycle(&[1, 2, 3, 4])
        } else {
            Permutation::cycle(&[1, 2])
        }
        .expect("valid cycle");
        let mut manifest = RunManifest {
            version: env!("CARGO_PKG_VERSION").to_string(),
            generators: standard_generators().iter().map(|g| g.label()).collect(),
            t: t.iter().map(|&i| group.element(i).label()).collect(),
            p: group.element(p).label(),
            alt_p: choices.alt_p,
            tau,
            alt_tau: choices.alt_tau,
            group_hash: group.canonical_hash(),
            cache_files: BTreeMap::new(),
        };
        let key = manifest.key();
        let cache = out_dir.map(|d| {
            for name in CACHED_STAGES {
                manifest
                    .cache_files
                    .insert(name.to_string(), format!("cache/{key}/{name}.json"));
            }
            Cache {
                dir: d.join("cache").join(&key),
            }
        });
        Ok(Stages {
            choices,
            group,
            t,
            p,
            tau,
            manifest,
            cache,
            x: OnceCell::new(),
            colorings: OnceCell::new(),
            b: OnceCell::new(),
            b2: OnceCell::new(),
            phi: OnceCell::new(),
            involution: OnceCell::new(),
            quotient: OnceCell::new(),
            labeling: OnceCell::new(),
            squares: OnceCell::new(),
            s5: OnceCell::new(),
            decomposition: OnceCell::new(),
            icosahedron_b2: OnceCell::new(),
        })
    }

    /// Loads `name` from the cache, or computes and stores it. Unreadable or
    /// invalid cache files are recomputed.
    fn through_cache<T>(
        &self,
        name: &str,
        encode: impl Fn(&T) -> Result<String>,
        decode: impl Fn(&str) -> Result<T>,
        compute: impl FnOnce() -> Result<T>,
    ) -> Result<T> {
        if let Some(c) = &self.cache {
            if let Some(v) = c.load(name, &decode) {
                return Ok(v);
            }
        }
        let v = compute()?;
        if let Some(c) = &self.cache {
            c.store(name, &encode(&v)?)?;
        }
        Ok(v)
    }

    fn cached_colorings(&self, name: &str, x: &Complex) -> Result<Vec<ColoringPartition>> {
        self.through_cache(
            name,
            |v| Ok(serde_json::to_string(v)?),
            |s| {
                let v: Vec<ColoringPartition> = serde_json::from_str(s)?;
                let g = x.graph();
                let ok = v.iter().all(|c| c.class_count() == 5 && c.is_proper(&g))
                    && v.iter()
                        .map(|c| c.classes().iter().map(Vec::len).sum::<usize>())
                        .all(|n| n == x.vertex_count());
                if ok {
                    Ok(v)
                } else {
                    Err(Error::Stage(format!("cached {name} is inconsistent")))
                }
            },
            || Ok(enumerate_colorings(x, 5)),
        )
    }

    pub fn grid(&self) -> DoubleCosetGrid {
        DoubleCosetGrid::new(&self.group, &self.t, self.p)
    }

    pub fn x(&self) -> Result<&Complex> {
        lazy(&self.x, || {
            self.through_cache(
                "600cell",
                |c: &Complex| Ok(c.to_json()),
                Complex::from_json,
                || build_600_cell(&self.group),
            )
        })
    }

    pub fn colorings(&self) -> Result<&Vec<ColoringPartition>> {
        lazy(&self.colorings, || {
            self.cached_colorings("colorings_600cell", self.x()?)
        })
    }

    pub fn b(&self) -> Result<&BComplex> {
        lazy(&self.b, || build_b(self.colorings()?, 5))
    }

    pub fn b2(&self) -> Result<&BComplex> {
        lazy(&self.b2, || {
            let b = self.b()?;
            build_b(&self.cached_colorings("colorings_B", &b.complex)?, 5)
        })
    }

    pub fn phi(&self) -> Result<&PhiMap> {
        lazy(&self.phi, || phi(self.x()?, self.b()?, self.b2()?))
    }

    /// `v ↦ −v` on vertex indices.
    pub fn involution(&self) -> Result<&Vec<usize>> {
        lazy(&self.involution, || {
            (0..self.group.len())
                .map(|v| {
                    self.group
                        .negation(v)
                        .ok_or_else(|| Error::Construction(format!("no negative of vertex {v}")))
                })
                .collect()
        })
    }

    pub fn quotient(&self) -> Result<&Quotient> {
        lazy(&self.quotient, || quotient(self.x()?, self.involution()?))
    }

    pub fn labeling(&self) -> Result<&PermutationLabeling> {
        lazy(&self.labeling, || {
            PermutationLabeling::new(self.b()?, self.b2()?, &self.grid(), false)
        })
    }

    /// Permutation label of `φ(v)` for each vertex of the quotient.
    pub fn quotient_images(&self) -> Result<Vec<Permutation>> {
        let (q, f, lab) = (self.quotient()?, self.phi()?, self.labeling()?);
        Ok(q.representatives
            .iter()
            .map(|&r| lab.b2_perms[f.assignment[r]])
            .collect())
    }

    /// Latin squares from the independent enumerator.
    pub fn squares(&self) -> Result<&Vec<SquareSimplex>> {
        lazy(&self.squares, || Ok(enumerate_latin_squares()))
    }

    pub fn s5(&self) -> Result<&Complex> {
        lazy(&self.s5, || s5_complex(self.squares()?))
    }

    pub fn decomposition(&self) -> Result<&Decomposition> {
        lazy(&self.decomposition, || {
            decompose(
                self.squares()?,
                &self.quotient()?.complex,
                &self.quotient_images()?,
                &self.tau,
            )
        })
    }

    pub fn icosahedron_b2(&self) -> Result<&(BComplex, BComplex)> {
        lazy(&self.icosahedron_b2, || build_b2(&icosahedron(), 4))
    }
}
