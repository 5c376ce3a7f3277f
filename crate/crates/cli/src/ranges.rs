//! `3..21`, `odd:3..21`, `1,4,9`, `7`; ranges are inclusive.

use std::fmt::Display;
use std::str::FromStr;

fn parse_num<T: FromStr>(s: &str) -> Result<T, String> {
    s.trim().parse().map_err(|_| format!("not a number: `{s}`"))
}

fn wide<T: TryInto<i64> + Display + Copy>(x: T) -> Result<i64, String> {
    x.try_into().map_err(|_| format!("out of range: {x}"))
}

pub fn parse_list<T>(s: &str) -> Result<Vec<T>, String>
where
    T: FromStr + Copy + Display + TryFrom<i64> + TryInto<i64>,
{
    let (filter, body) = match s.split_once(':') {
        Some(("odd", b)) => (Some(1), b),
        Some(("even", b)) => (Some(0), b),
        Some((f, _)) => return Err(format!("unknown filter `{f}`")),
        None => (None, s),
    };
    let mut out = Vec::new();
    for part in body.split(',').filter(|p| !p.trim().is_empty()) {
        match part.split_once("..") {
            Some((a, b)) => {
                let (a, b) = (wide(parse_num::<T>(a)?)?, wide(parse_num::<T>(b)?)?);
                if a > b {
                    return Err(format!("empty range `{part}`"));
                }
                for x in a..=b {
                    out.push(T::try_from(x).map_err(|_| format!("out of range: {x}"))?);
                }
            }
            None => out.push(parse_num(part)?),
        }
    }
    if let Some(parity) = filter {
        out.retain(|&x| wide(x).is_ok_and(|x| x.rem_euclid(2) == parity));
    }
    if out.is_empty() {
        return Err(format!("`{s}` selects nothing"));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(parse_list::<u32>("odd:3..9").unwrap(), vec![3, 5, 7, 9]);
        assert_eq!(parse_list::<i64>("-1,3..4").unwrap(), vec![-1, 3, 4]);
        assert_eq!(parse_list::<u32>("2,3").unwrap(), vec![2, 3]);
        assert_eq!(parse_list::<u32>("0..2").unwrap(), vec![0, 1, 2]);
        assert!(parse_list::<u32>("5..3").is_err());
        assert!(parse_list::<u32>("odd:2..2").is_err());
        assert!(parse_list::<u32>("prime:3").is_err());
        assert!(parse_list::<u32>("-1").is_err());
    }
}
