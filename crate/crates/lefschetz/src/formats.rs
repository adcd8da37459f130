//! JSON, CSV and JSON-lines encodings.
//!
//! Canonical JSON is produced by going through [`serde_json::Value`], whose
//! maps keep keys sorted, so the same value always serializes to the same bytes.

use std::collections::BTreeMap;
use std::io::Write;

use lefschetz_core::braid::{BraidWord, NormalForm, Permutation};
use lefschetz_core::cover::AuditRecord;
use lefschetz_core::factorization::{
    CurveKind, CurveSymbol, Letter, SeparatingType, SurfaceSignature, Target, TwistFactorization,
};
use lefschetz_core::invariants::InvariantRecord;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};

pub fn canonical_json<T: Serialize>(value: &T) -> Result<String> {
    Ok(serde_json::to_string(&serde_json::to_value(value)?)?)
}

pub fn canonical_json_pretty<T: Serialize>(value: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(&serde_json::to_value(value)?)?)
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

/// `{"strands": n, "letters": [±i, …]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BraidWordJson {
    pub strands: usize,
    pub letters: Vec<i32>,
}

impl From<&BraidWord> for BraidWordJson {
    fn from(w: &BraidWord) -> Self {
        BraidWordJson {
            strands: w.strands(),
            letters: w.letters().to_vec(),
        }
    }
}

impl TryFrom<BraidWordJson> for BraidWord {
    type Error = Error;

    fn try_from(j: BraidWordJson) -> Result<Self> {
        Ok(BraidWord::new(j.strands, j.letters)?)
    }
}

pub fn read_braid_word(text: &str) -> Result<BraidWord> {
    serde_json::from_str::<BraidWordJson>(text)?.try_into()
}

pub fn write_braid_word(w: &BraidWord) -> Result<String> {
    canonical_json(&BraidWordJson::from(w))
}

#[derive(Serialize)]
struct NormalFormBody<'a> {
    strands: usize,
    infimum: i64,
    factors: Vec<&'a [u32]>,
}

/// `{strands, infimum, factors, digest}` where `digest` is the SHA-256 of the
/// canonical JSON of the other three fields.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormalFormCertificate {
    pub strands: usize,
    pub infimum: i64,
    pub factors: Vec<Vec<u32>>,
    pub digest: String,
}

fn normal_form_digest(strands: usize, infimum: i64, factors: &[Vec<u32>]) -> String {
    let body = NormalFormBody {
        strands,
        infimum,
        factors: factors.iter().map(|f| f.as_slice()).collect(),
    };
    let text = canonical_json(&body).expect("plain integers serialize");
    sha256_hex(text.as_bytes())
}

impl NormalFormCertificate {
    pub fn new(nf: &NormalForm) -> Self {
        let factors: Vec<Vec<u32>> = nf.factors().iter().map(|p| p.images().to_vec()).collect();
        let digest = normal_form_digest(nf.strands(), nf.infimum(), &factors);
        NormalFormCertificate {
            strands: nf.strands(),
            infimum: nf.infimum(),
            factors,
            digest,
        }
    }

    /// Checks the digest and that the factors form a left-greedy normal form.
    pub fn validate(&self) -> Result<NormalForm> {
        let computed = normal_form_digest(self.strands, self.infimum, &self.factors);
        if computed != self.digest {
            return Err(Error::Digest {
                stored: self.digest.clone(),
                computed,
            });
        }
        let factors = self
            .factors
            .iter()
            .map(|f| Permutation::from_images(f.clone()).ok_or(Error::NotNormal))
            .collect::<Result<Vec<_>>>()?;
        NormalForm::from_parts(self.strands, self.infimum, factors).ok_or(Error::NotNormal)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveEntry {
    #[serde(flatten)]
    pub kind: CurveKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub homology: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub separating: Option<SeparatingType>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cap_alias: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LetterEntry {
    pub curve: String,
    pub power: i32,
}

/// `{surface, curves: {name: {kind, data, …}}, letters: [{curve, power}], target}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorizationJson {
    pub surface: SurfaceSignature,
    pub curves: BTreeMap<String, CurveEntry>,
    pub letters: Vec<LetterEntry>,
    pub target: Target,
}

impl From<&TwistFactorization> for FactorizationJson {
    fn from(f: &TwistFactorization) -> Self {
        let curves = f
            .curves
            .iter()
            .map(|c| {
                (
                    c.name.clone(),
                    CurveEntry {
                        kind: c.kind.clone(),
                        homology: c.homology.clone(),
                        separating: c.separating,
                        cap_alias: c.cap_alias.clone(),
                    },
                )
            })
            .collect();
        let letters = f
            .letters
            .iter()
            .map(|l| LetterEntry {
                curve: f.curves[l.curve].name.clone(),
                power: l.power,
            })
            .collect();
        FactorizationJson {
            surface: f.ambient,
            curves,
            letters,
            target: f.target,
        }
    }
}

impl TryFrom<FactorizationJson> for TwistFactorization {
    type Error = Error;

    /// Curves are numbered in name order.
    fn try_from(j: FactorizationJson) -> Result<Self> {
        let mut f = TwistFactorization::new(j.surface, j.target);
        for (name, entry) in j.curves {
            if let CurveKind::DerivedBand(w) = &entry.kind {
                BraidWord::new(w.strands(), w.letters().to_vec())?;
            }
            let mut c = CurveSymbol::new(name, entry.kind);
            c.homology = entry.homology;
            c.separating = entry.separating;
            c.cap_alias = entry.cap_alias;
            f.curves.push(c);
        }
        for l in j.letters {
            let curve = f.curve_index(&l.curve).ok_or_else(|| {
                Error::Usage(format!("letter names undeclared curve '{}'", l.curve))
            })?;
            f.letters.push(Letter {
                curve,
                power: l.power,
            });
        }
        Ok(f)
    }
}

pub fn write_factorization(f: &TwistFactorization) -> Result<String> {
    canonical_json_pretty(&FactorizationJson::from(f))
}

pub fn read_factorization(text: &str) -> Result<TwistFactorization> {
    serde_json::from_str::<FactorizationJson>(text)?.try_into()
}

/// One CSV row per record, header included.
pub fn write_invariants_csv<W: Write>(out: W, rows: &[InvariantRecord]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for r in rows {
        w.serialize(r)?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_invariants_csv(text: &str) -> Result<Vec<InvariantRecord>> {
    let mut r = csv::Reader::from_reader(text.as_bytes());
    Ok(r.deserialize().collect::<Result<Vec<_>, _>>()?)
}

pub fn write_audit_line<W: Write>(mut out: W, rec: &AuditRecord) -> Result<()> {
    writeln!(out, "{}", canonical_json(rec)?)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use lefschetz_core::braid::full_twist;
    use lefschetz_core::factorization::build_pencil_word;

    #[test]
    fn braid_word_json() {
        let w = BraidWord::new(4, vec![1, -2, 3]).unwrap();
        let text = write_braid_word(&w).unwrap();
        assert_eq!(text, r#"{"letters":[1,-2,3],"strands":4}"#);
        assert_eq!(read_braid_word(&text).unwrap(), w);
        assert!(read_braid_word(r#"{"letters":[4],"strands":4}"#).is_err());
    }

    #[test]
    fn certificate_digest_is_checked() {
        let nf = full_twist(5).normal_form();
        let mut cert = NormalFormCertificate::new(&nf);
        assert_eq!(cert.validate().unwrap(), nf);
        cert.infimum += 1;
        assert!(matches!(cert.validate(), Err(Error::Digest { .. })));
    }

    #[test]
    fn factorization_round_trip_is_byte_stable() {
        let f = build_pencil_word(4, 1, 2).unwrap();
        let text = write_factorization(&f).unwrap();
        let back = read_factorization(&text).unwrap();
        assert_eq!(back.letter_names(), f.letter_names());
        assert_eq!(write_factorization(&back).unwrap(), text);
    }
}
