//! Constructor expressions for standard graphs:
//! `K(a,b)`, `C(n)`, `Kn(n)`, `P(n)`, `U(t, expr)` and `DC(expr)`.

use hardcore::Graph;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
#[error("expression error at byte {offset}: {reason}")]
pub struct ExprError {
    pub offset: usize,
    pub reason: String,
}

pub fn parse_expr(text: &str) -> Result<Graph, ExprError> {
    let mut p = Parser { text, pos: 0 };
    let g = p.expr()?;
    p.skip_ws();
    if p.pos != text.len() {
        return Err(p.error("trailing input"));
    }
    Ok(g)
}

/// Cheap test used to tell expressions apart from file names.
pub fn looks_like_expr(text: &str) -> bool {
    let t = text.trim_start();
    ["K(", "C(", "Kn(", "P(", "U(", "DC("]
        .iter()
        .any(|head| t.starts_with(head))
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, reason: impl Into<String>) -> ExprError {
        ExprError {
            offset: self.pos,
            reason: reason.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.text[self.pos..].starts_with(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: char) -> Result<(), ExprError> {
        self.skip_ws();
        if self.text[self.pos..].starts_with(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(format!("expected '{c}'")))
        }
    }

    fn name(&mut self) -> &str {
        self.skip_ws();
        let start = self.pos;
        while self.text[self.pos..].starts_with(|c: char| c.is_ascii_alphabetic()) {
            self.pos += 1;
        }
        &self.text[start..self.pos]
    }

    fn number(&mut self) -> Result<usize, ExprError> {
        self.skip_ws();
        let start = self.pos;
        while self.text[self.pos..].starts_with(|c: char| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a number"));
        }
        self.text[start..self.pos].parse().map_err(|_| ExprError {
            offset: start,
            reason: "number too large".into(),
        })
    }

    fn expr(&mut self) -> Result<Graph, ExprError> {
        let start = self.pos;
        let name = self.name().to_string();
        self.eat('(')?;
        let built = match name.as_str() {
            "K" => {
                let a = self.number()?;
                self.eat(',')?;
                let b = self.number()?;
                Graph::complete_bipartite(a, b)
            }
            "C" => Graph::cycle(self.number()?),
            "Kn" => Graph::complete(self.number()?),
            "P" => Graph::path(self.number()?),
            "U" => {
                let t = self.number()?;
                self.eat(',')?;
                self.expr()?.copies(t)
            }
            "DC" => self.expr()?.double_cover(),
            _ => {
                return Err(ExprError {
                    offset: start,
                    reason: format!("unknown constructor {name:?}"),
                })
            }
        };
        self.eat(')')?;
        built.map_err(|e| ExprError {
            offset: start,
            reason: e.to_string(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constructors() {
        assert_eq!(
            parse_expr("K(3,3)").unwrap(),
            Graph::complete_bipartite(3, 3).unwrap()
        );
        assert_eq!(parse_expr(" C( 5 ) ").unwrap(), Graph::cycle(5).unwrap());
        assert_eq!(parse_expr("Kn(4)").unwrap(), Graph::complete(4).unwrap());
        assert_eq!(parse_expr("P(3)").unwrap(), Graph::path(3).unwrap());
        assert_eq!(
            parse_expr("U(2,K(2,2))").unwrap(),
            Graph::complete_bipartite(2, 2).unwrap().copies(2).unwrap()
        );
        assert_eq!(
            parse_expr("U(2, DC(Kn(3)))").unwrap(),
            Graph::complete(3)
                .unwrap()
                .double_cover()
                .unwrap()
                .copies(2)
                .unwrap()
        );
    }

    #[test]
    fn errors_carry_offsets() {
        assert_eq!(parse_expr("K(3 3)").unwrap_err().offset, 4);
        assert_eq!(parse_expr("X(3)").unwrap_err().offset, 0);
        assert_eq!(parse_expr("C(5))").unwrap_err().offset, 4);
        assert_eq!(parse_expr("U(2,Q(1))").unwrap_err().offset, 4);
        assert!(parse_expr("C(2)").is_err());
        assert!(parse_expr("Kn(65)").is_err());
    }

    #[test]
    fn detection() {
        assert!(looks_like_expr("K(3,3)"));
        assert!(looks_like_expr("DC(C(5))"));
        assert!(!looks_like_expr("graphs.g6"));
        assert!(!looks_like_expr("-"));
    }
}
