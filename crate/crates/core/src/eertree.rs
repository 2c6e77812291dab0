//! Palindromic tree (eertree): one node per distinct palindromic factor,
//! built in a single left-to-right pass.

use crate::word::Word;

const IMAGINARY: usize = 0;
const EMPTY: usize = 1;

#[derive(Debug, Clone)]
struct Node {
    len: isize,
    suffix_link: usize,
    edges: Vec<(u8, usize)>,
}

impl Node {
    fn child(&self, symbol: u8) -> Option<usize> {
        self.edges
            .iter()
            .find(|&&(s, _)| s == symbol)
            .map(|&(_, n)| n)
    }
}

/// Incremental index of the distinct palindromic factors of a word.
///
/// Node 0 is the imaginary root of length -1; node 1 stands for ε. Every
/// other node is a distinct non-empty palindrome.
#[derive(Debug, Clone)]
pub struct PalindromeIndex {
    text: Vec<u8>,
    nodes: Vec<Node>,
    longest_suffix: usize,
    prefix_counts: Vec<usize>,
}

impl Default for PalindromeIndex {
    fn default() -> Self {
        Self::new()
    }
}

impl PalindromeIndex {
    pub fn new() -> Self {
        let root = |len| Node {
            len,
            suffix_link: IMAGINARY,
            edges: Vec::new(),
        };
        Self {
            text: Vec::new(),
            nodes: vec![root(-1), root(0)],
            longest_suffix: EMPTY,
            prefix_counts: vec![0],
        }
    }

    pub fn build(w: &Word) -> Self {
        let mut index = Self::new();
        for &b in w.as_bytes() {
            index.push(b);
        }
        index
    }

    /// Walks suffix links from `node` until the palindrome it names can be
    /// extended on both sides by the symbol at position `pos`.
    fn extendable(&self, mut node: usize, pos: usize) -> usize {
        loop {
            let len = self.nodes[node].len;
            let left = pos as isize - len - 1;
            if left >= 0 && self.text[left as usize] == self.text[pos] {
                return node;
            }
            node = self.nodes[node].suffix_link;
        }
    }

    /// Appends one symbol. Returns true when it creates a new palindrome.
    pub fn push(&mut self, symbol: u8) -> bool {
        self.text.push(symbol);
        let pos = self.text.len() - 1;
        let parent = self.extendable(self.longest_suffix, pos);
        if let Some(existing) = self.nodes[parent].child(symbol) {
            self.longest_suffix = existing;
            self.prefix_counts.push(self.distinct_nonempty());
            return false;
        }
        let len = self.nodes[parent].len + 2;
        let suffix_link = if len == 1 {
            EMPTY
        } else {
            let p = self.extendable(self.nodes[parent].suffix_link, pos);
            self.nodes[p]
                .child(symbol)
                .expect("proper palindromic suffix already indexed")
        };
        let id = self.nodes.len();
        self.nodes.push(Node {
            len,
            suffix_link,
            edges: Vec::new(),
        });
        self.nodes[parent].edges.push((symbol, id));
        self.longest_suffix = id;
        self.prefix_counts.push(self.distinct_nonempty());
        true
    }

    /// Number of distinct non-empty palindromic factors seen so far.
    pub fn distinct_nonempty(&self) -> usize {
        self.nodes.len() - 2
    }

    /// Number of distinct palindromic factors, ε included.
    pub fn len(&self) -> usize {
        self.nodes.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `prefix_counts()[i]` is the number of distinct non-empty palindromic
    /// factors of the length-`i` prefix.
    pub fn prefix_counts(&self) -> &[usize] {
        &self.prefix_counts
    }

    /// Length of the longest palindromic suffix of the text so far.
    pub fn longest_palindromic_suffix(&self) -> usize {
        self.nodes[self.longest_suffix].len.max(0) as usize
    }

    /// Lengths of all indexed non-empty palindromes, in creation order.
    pub fn palindrome_lengths(&self) -> impl Iterator<Item = usize> + '_ {
        self.nodes[2..].iter().map(|n| n.len as usize)
    }
}

/// Count of distinct non-empty palindromic factors of `w`, in one pass.
pub fn index_count_palindromes(w: &Word) -> usize {
    PalindromeIndex::build(w).distinct_nonempty()
}
