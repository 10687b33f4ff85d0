//! graph6 codec: the printable ASCII exchange format used by the standard
//! catalogs of non-isomorphic graphs.
//!
//! A line is a header byte `63 + n` (for `n <= 62`) followed by the upper
//! triangle of the adjacency matrix read column by column, packed big-endian
//! six bits per character, each character offset by 63. Trailing padding bits
//! must be zero. The multi-byte header form for 63 or more vertices is
//! recognized and rejected.

use std::io::BufRead;

use thiserror::Error;

use crate::graph::Graph;

/// Largest vertex count expressible with the single-byte header.
pub const GRAPH6_MAX_N: usize = 62;

const OFFSET: u8 = 63;
const EXTENDED_MARKER: u8 = 126;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty line where a graph6 header was expected")]
    EmptyLine,
    #[error("malformed header byte 0x{byte:02x}")]
    BadHeader { byte: u8 },
    #[error("multi-byte header for {n} vertices is not supported (single-byte limit {GRAPH6_MAX_N})")]
    ExtendedHeader { n: usize },
    #[error("payload character 0x{byte:02x} at byte {position} is outside the printable range 63..=126")]
    CharOutOfRange { position: usize, byte: u8 },
    #[error("truncated payload: {got} characters carry fewer than the {needed_bits} adjacency bits")]
    TruncatedPayload { needed_bits: usize, got: usize },
    #[error("{extra} extra characters after the adjacency payload")]
    TrailingData { extra: usize },
    #[error("nonzero padding bits after the adjacency payload")]
    NonzeroPadding,
    #[error("cannot encode {n} vertices in the single-byte header form (limit {GRAPH6_MAX_N})")]
    EncodeCapacity { n: usize },
}

/// Decode one graph6 line.
pub fn parse_graph6(line: &str) -> Result<Graph, Graph6Error> {
    let bytes = line.as_bytes();
    let Some(&head) = bytes.first() else {
        return Err(Graph6Error::EmptyLine);
    };
    if head == EXTENDED_MARKER {
        // 18-bit (or 36-bit) vertex count follows; decode it for the error
        // message when well-formed, then reject.
        let n = match bytes.get(1..4) {
            Some(&[a, b, c])
                if a != EXTENDED_MARKER
                    && [a, b, c].iter().all(|&x| (OFFSET..=EXTENDED_MARKER).contains(&x)) =>
            {
                ((a - OFFSET) as usize) << 12 | ((b - OFFSET) as usize) << 6 | (c - OFFSET) as usize
            }
            _ => GRAPH6_MAX_N + 1,
        };
        return Err(Graph6Error::ExtendedHeader { n });
    }
    if !(OFFSET..EXTENDED_MARKER).contains(&head) {
        return Err(Graph6Error::BadHeader { byte: head });
    }
    let n = (head - OFFSET) as usize;
    let needed_bits = if n < 2 { 0 } else { n * (n - 1) / 2 };
    let needed_chars = needed_bits.div_ceil(6);
    let payload = &bytes[1..];
    for (i, &b) in payload.iter().enumerate() {
        if !(OFFSET..=EXTENDED_MARKER).contains(&b) {
            return Err(Graph6Error::CharOutOfRange {
                position: i + 1,
                byte: b,
            });
        }
    }
    if payload.len() < needed_chars {
        return Err(Graph6Error::TruncatedPayload {
            needed_bits,
            got: payload.len(),
        });
    }
    if payload.len() > needed_chars {
        return Err(Graph6Error::TrailingData {
            extra: payload.len() - needed_chars,
        });
    }

    let mut adj = vec![0u64; n];
    let mut bit = 0usize;
    'cols: for j in 1..n {
        for i in 0..j {
            let value = payload[bit / 6] - OFFSET;
            if value >> (5 - bit % 6) & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
            bit += 1;
            if bit == needed_bits {
                break 'cols;
            }
        }
    }
    // all bits past the triangle must be zero
    for rest in needed_bits..needed_chars * 6 {
        if (payload[rest / 6] - OFFSET) >> (5 - rest % 6) & 1 == 1 {
            return Err(Graph6Error::NonzeroPadding);
        }
    }
    Ok(Graph::from_adjacency(n, adj))
}

/// Encode a graph in the single-byte header form (`n <= 62`).
pub fn encode_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.n();
    if n > GRAPH6_MAX_N {
        return Err(Graph6Error::EncodeCapacity { n });
    }
    let mut out = vec![OFFSET + n as u8];
    let mut acc = 0u8;
    let mut filled = 0u8;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(OFFSET + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(OFFSET + (acc << (6 - filled)));
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are printable ASCII"))
}

/// A graph decoded from a stream, with its source position and original text.
#[derive(Debug, Clone)]
pub struct StreamedGraph {
    pub line: u64,
    pub text: String,
    pub graph: Graph,
}

/// A parse failure tagged with its source line.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}: {kind}")]
pub struct Graph6StreamError {
    pub line: u64,
    pub kind: Graph6Error,
}

/// Lazy line-by-line decoder for graph6 streams.
///
/// Blank lines and `>>…` banner lines are skipped. In strict mode the
/// iterator yields the first error and then stops; in lenient mode errors are
/// yielded inline and decoding continues with the next line.
pub struct Graph6Reader<R> {
    source: R,
    line: u64,
    strict: bool,
    poisoned: bool,
    buf: String,
}

impl<R: BufRead> Graph6Reader<R> {
    pub fn new(source: R, strict: bool) -> Self {
        Graph6Reader {
            source,
            line: 0,
            strict,
            poisoned: false,
            buf: String::new(),
        }
    }

    /// Skip everything up to and including physical line `cursor` (used to
    /// resume an interrupted run).
    pub fn skip_to(&mut self, cursor: u64) -> std::io::Result<()> {
        while self.line < cursor {
            self.buf.clear();
            if self.source.read_line(&mut self.buf)? == 0 {
                break;
            }
            self.line += 1;
        }
        Ok(())
    }

    /// The physical line number of the most recently consumed line.
    pub fn position(&self) -> u64 {
        self.line
    }
}

impl<R: BufRead> Iterator for Graph6Reader<R> {
    type Item = std::io::Result<Result<StreamedGraph, Graph6StreamError>>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.poisoned {
            return None;
        }
        loop {
            self.buf.clear();
            match self.source.read_line(&mut self.buf) {
                Ok(0) => return None,
                Ok(_) => {}
                Err(e) => {
                    self.poisoned = true;
                    return Some(Err(e));
                }
            }
            self.line += 1;
            let text = self.buf.trim_end_matches(['\n', '\r']);
            if text.is_empty() || text.starts_with(">>") {
                continue;
            }
            return Some(Ok(match parse_graph6(text) {
                Ok(graph) => Ok(StreamedGraph {
                    line: self.line,
                    text: text.to_string(),
                    graph,
                }),
                Err(kind) => {
                    if self.strict {
                        self.poisoned = true;
                    }
                    Err(Graph6StreamError {
                        line: self.line,
                        kind,
                    })
                }
            }));
        }
    }
}
