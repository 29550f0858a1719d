use super::{parse, DslError, RingExpr};

/// One expression of a catalog file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    /// 1-based line number in the catalog text.
    pub line: usize,
    pub expr: RingExpr,
}

impl CatalogEntry {
    pub fn text(&self) -> String {
        self.expr.to_string()
    }
}

/// Parses catalog text: one expression per line, `#` starts a comment,
/// blank lines are skipped. Error positions refer to catalog lines.
pub fn parse_catalog(text: &str) -> Result<Vec<CatalogEntry>, DslError> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        if line.trim().is_empty() {
            continue;
        }
        let expr = parse(line).map_err(|e| e.at_line(i + 1))?;
        out.push(CatalogEntry { line: i + 1, expr });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn comments_and_blank_lines() {
        let cat = parse_catalog("# rings\n\nZ2\n  Prod(Z2,Z3)  # six\n").unwrap();
        assert_eq!(cat.len(), 2);
        assert_eq!(cat[1].line, 4);
        assert_eq!(cat[1].text(), "Prod(Z2, Z3)");
    }

    #[test]
    fn error_line_numbers() {
        let err = parse_catalog("Z2\n\nT(2, GF(4)\n").unwrap_err();
        assert_eq!(err.pos().line, 3);
    }
}
