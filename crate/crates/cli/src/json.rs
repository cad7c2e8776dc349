//! Pretty JSON where arrays nested inside arrays stay on one line, so each
//! matrix triple or witness entry is a single diffable line.

use std::io::{self, Write};

use serde::Serialize;
use serde_json::ser::{Formatter, PrettyFormatter};

#[derive(Default)]
struct Compact<'a> {
    pretty: PrettyFormatter<'a>,
    /// One entry per open array or object: true for arrays.
    stack: Vec<bool>,
    /// Depth of the outermost array that is being written compactly.
    compact_from: Option<usize>,
}

impl Compact<'_> {
    fn compact(&self) -> bool {
        self.compact_from.is_some()
    }
}

impl Formatter for Compact<'_> {
    fn begin_array<W: ?Sized + Write>(&mut self, w: &mut W) -> io::Result<()> {
        if self.compact_from.is_none() && self.stack.last() == Some(&true) {
            self.compact_from = Some(self.stack.len());
        }
        self.stack.push(true);
        if self.compact() {
            w.write_all(b"[")
        } else {
            self.pretty.begin_array(w)
        }
    }

    fn end_array<W: ?Sized + Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.stack.pop();
        let r = if self.compact() { w.write_all(b"]") } else { self.pretty.end_array(w) };
        if self.compact_from == Some(self.stack.len()) {
            self.compact_from = None;
        }
        r
    }

    fn begin_array_value<W: ?Sized + Write>(&mut self, w: &mut W, first: bool) -> io::Result<()> {
        if self.compact() {
            if first {
                Ok(())
            } else {
                w.write_all(b", ")
            }
        } else {
            self.pretty.begin_array_value(w, first)
        }
    }

    fn end_array_value<W: ?Sized + Write>(&mut self, w: &mut W) -> io::Result<()> {
        if self.compact() {
            Ok(())
        } else {
            self.pretty.end_array_value(w)
        }
    }

    fn begin_object<W: ?Sized + Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.stack.push(false);
        if self.compact() {
            w.write_all(b"{")
        } else {
            self.pretty.begin_object(w)
        }
    }

    fn end_object<W: ?Sized + Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.stack.pop();
        if self.compact() {
            w.write_all(b"}")
        } else {
            self.pretty.end_object(w)
        }
    }

    fn begin_object_key<W: ?Sized + Write>(&mut self, w: &mut W, first: bool) -> io::Result<()> {
        if self.compact() {
            if first {
                Ok(())
            } else {
                w.write_all(b", ")
            }
        } else {
            self.pretty.begin_object_key(w, first)
        }
    }

    fn begin_object_value<W: ?Sized + Write>(&mut self, w: &mut W) -> io::Result<()> {
        w.write_all(b": ")
    }

    fn end_object_value<W: ?Sized + Write>(&mut self, w: &mut W) -> io::Result<()> {
        if self.compact() {
            Ok(())
        } else {
            self.pretty.end_object_value(w)
        }
    }
}

pub fn to_string<T: Serialize>(value: &T) -> String {
    let mut buf = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut buf, Compact::default());
    value.serialize(&mut ser).expect("serializing to memory");
    buf.push(b'\n');
    String::from_utf8(buf).expect("serde_json writes UTF-8")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nested_arrays_are_inline() {
        let v = serde_json::json!({"a": [[0, 1, "1/2"], [2, 3, "-1/1"]], "b": ["x", "y"], "c": []});
        let s = to_string(&v);
        assert_eq!(s, "{\n  \"a\": [\n    [0, 1, \"1/2\"],\n    [2, 3, \"-1/1\"]\n  ],\n  \"b\": [\n    \"x\",\n    \"y\"\n  ],\n  \"c\": []\n}\n");
        assert_eq!(serde_json::from_str::<serde_json::Value>(&s).unwrap(), v);
    }
}
