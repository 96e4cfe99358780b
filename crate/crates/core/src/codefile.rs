// SPDX-License-Identifier: Apache-2.0

//! Plain-text code files.
//!
//! ```text
//! # n=8
//! # alphabet=binary
//! # construction=cr Z3+Z3 g=(0,0)
//! # pairing=1-8,2-7,3-6,4-5
//! # K=16
//! 00000000
//! 00000011
//! ```
//!
//! Header lines are `# key=value`; `pairing` is 1-based and `unpaired` names
//! the 1-based coordinate left out of the pairs. Unknown keys are kept. The
//! body holds one word per line in ascending order.

use std::fmt::Write as _;
use std::path::Path;

use crate::channels::ChannelSpec;
use crate::code::{ClassicalCode, CodeMeta};
use crate::error::{Error, Result};
use crate::words::{Alphabet, Pairing, Word};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodeFile {
    pub code: ClassicalCode,
    /// `K` as read from a header, if present.
    pub declared_k: Option<u64>,
    pub extra: Vec<(String, String)>,
}

/// Quantum dimension of the binary expansion.
pub fn quantum_dimension(code: &ClassicalCode) -> u64 {
    match code.alphabet() {
        Alphabet::Binary => code.size() as u64 / 2,
        _ => code.expanded_size() / 2,
    }
}

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

impl CodeFile {
    pub fn new(code: ClassicalCode) -> Self {
        CodeFile {
            code,
            declared_k: None,
            extra: Vec::new(),
        }
    }

    pub fn k(&self) -> u64 {
        quantum_dimension(&self.code)
    }

    pub fn to_text(&self) -> String {
        let code = &self.code;
        let meta = &code.meta;
        let mut out = String::new();
        let mut header = |k: &str, v: &str| {
            let _ = writeln!(out, "# {k}={v}");
        };
        header("n", &code.word_len().to_string());
        header("alphabet", code.alphabet().name());
        if let Some(ch) = &meta.channel {
            header("channel", &ch.to_string());
        }
        if !meta.construction.is_empty() {
            header("construction", &meta.construction);
        }
        if let Some(p) = &meta.pairing {
            header("pairing", &p.pairs_text());
            if let Some(u) = p.unpaired() {
                header("unpaired", &(u + 1).to_string());
            }
        }
        header("K", &self.k().to_string());
        if let Some(note) = &meta.note {
            header("note", note);
        }
        for (k, v) in &self.extra {
            header(k, v);
        }
        for w in code.words() {
            let _ = writeln!(out, "{w}");
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut fields: Vec<(usize, String, String)> = Vec::new();
        let mut body: Vec<(usize, &str)> = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix('#') {
                if let Some((k, v)) = rest.split_once('=') {
                    fields.push((i + 1, k.trim().to_string(), v.trim().to_string()));
                }
            } else {
                body.push((i + 1, line));
            }
        }
        let get = |key: &str| fields.iter().find(|f| f.1 == key);
        let number = |key: &str| -> Result<Option<usize>> {
            get(key)
                .map(|(l, _, v)| {
                    v.parse()
                        .map_err(|_| parse_error(*l, format!("bad {key} {v:?}")))
                })
                .transpose()
        };
        let n = number("n")?.ok_or_else(|| parse_error(1, "missing n"))?;
        let unpaired = number("unpaired")?;
        let pairing = match get("pairing") {
            Some((l, _, v)) => {
                let pairs = v.split(',').filter(|s| !s.trim().is_empty()).count();
                let len = 2 * pairs + usize::from(unpaired.is_some());
                Some(Pairing::parse(len, v, unpaired).map_err(|e| parse_error(*l, e.to_string()))?)
            }
            None => None,
        };
        let alphabet = match get("alphabet").map(|f| (f.0, f.2.as_str())) {
            None | Some((_, "binary")) => Alphabet::Binary,
            Some((_, "ternary")) => Alphabet::Ternary,
            Some((l, "generalized-ternary")) => {
                let origin = pairing
                    .as_ref()
                    .and_then(Pairing::unpaired)
                    .ok_or_else(|| {
                        parse_error(
                            l,
                            "generalized-ternary needs a pairing with an unpaired coordinate",
                        )
                    })?;
                Alphabet::GeneralizedTernary {
                    bit_origin: origin as u8,
                }
            }
            Some((l, other)) => return Err(parse_error(l, format!("unknown alphabet {other:?}"))),
        };
        let channel = match get("channel") {
            Some((l, _, v)) => Some(
                v.parse::<ChannelSpec>()
                    .map_err(|e| parse_error(*l, e.to_string()))?,
            ),
            None => None,
        };
        let declared_k = number("K")?.map(|k| k as u64);
        let mut words = Vec::with_capacity(body.len());
        for (l, text) in &body {
            let w = Word::parse(text, alphabet).map_err(|e| parse_error(*l, e.to_string()))?;
            if w.len() != n {
                return Err(parse_error(
                    *l,
                    format!("word length {} differs from n={n}", w.len()),
                ));
            }
            if words.last().is_some_and(|prev: &Word| *prev >= w) {
                return Err(parse_error(*l, "words must be sorted and distinct"));
            }
            words.push(w);
        }
        let code = ClassicalCode::new(alphabet, n, words)?.with_meta(CodeMeta {
            construction: get("construction").map(|f| f.2.clone()).unwrap_or_default(),
            channel,
            pairing,
            note: get("note").map(|f| f.2.clone()),
        });
        const KNOWN: [&str; 8] = [
            "n",
            "alphabet",
            "channel",
            "construction",
            "pairing",
            "unpaired",
            "K",
            "note",
        ];
        let extra = fields
            .into_iter()
            .filter(|f| !KNOWN.contains(&f.1.as_str()))
            .map(|f| (f.1, f.2))
            .collect();
        Ok(CodeFile {
            code,
            declared_k,
            extra,
        })
    }

    pub fn read(path: impl AsRef<Path>) -> Result<Self> {
        let text = std::fs::read_to_string(path.as_ref())
            .map_err(|e| parse_error(0, format!("{}: {e}", path.as_ref().display())))?;
        CodeFile::parse(&text)
    }

    pub fn write(&self, path: impl AsRef<Path>) -> Result<()> {
        std::fs::write(path.as_ref(), self.to_text())
            .map_err(|e| parse_error(0, format!("{}: {e}", path.as_ref().display())))
    }

    /// The code itself if binary, otherwise its expansion under the stored
    /// pairing.
    pub fn binary_view(&self) -> Result<ClassicalCode> {
        if self.code.alphabet() == Alphabet::Binary {
            return Ok(self.code.clone());
        }
        let pairing = self
            .code
            .meta
            .pairing
            .as_ref()
            .ok_or_else(|| Error::InvalidPairing("ternary code file has no pairing".into()))?;
        self.code.binarize(pairing)
    }
}
