//! Reference copy of the published `E_{N,n}` table, `0 <= N <= 6`, even
//! `0 <= n <= 14`, kept as the printed strings.

use crate::error::{invalid, Result};
use crate::Rational;

pub const TABLE1_MAX_PARAM: usize = 6;
pub const TABLE1_MAX_INDEX: usize = 14;

const TABLE1: [[&str; 8]; 7] = [
    [
        "1",
        "-1",
        "5",
        "-61",
        "1385",
        "-50521",
        "2702765",
        "-199360981",
    ],
    [
        "1",
        "-1/6",
        "1/10",
        "-5/42",
        "7/30",
        "-15/22",
        "7601/2730",
        "-91/6",
    ],
    [
        "1",
        "-1/15",
        "13/1050",
        "-1/350",
        "-31/173250",
        "1343/750750",
        "-6137/2388750",
        "3499/6693750",
    ],
    [
        "1",
        "-1/28",
        "17/5880",
        "-29/362208",
        "-863/6420960",
        "6499/131843712",
        "6997213/156894017280",
        "-68936107/917226562560",
    ],
    [
        "1",
        "-1/45",
        "7/7425",
        "53/2027025",
        "-443/22052250",
        "-10157/4873547250",
        "558599021/126395447928750",
        "39045649/62503243481250",
    ],
    [
        "1",
        "-1/66",
        "25/66066",
        "47/2906904",
        "-16945/5300012718",
        "-475767/492312292472",
        "71844089/268802511689712",
        "1162911301/4483980359834976",
    ],
    [
        "1",
        "-1/91",
        "29/165620",
        "1205/153728484",
        "-2279/4467168888",
        "-6430761/25339270989032",
        "-17675104079/4917799642149532320",
        "837165624457/24588998210747661600",
    ],
];

/// The printed cell for `E_{N,n}`; `n` must be even and both indices in range.
pub fn table1_cell(param: usize, n: usize) -> Result<Rational> {
    if param > TABLE1_MAX_PARAM || n > TABLE1_MAX_INDEX || n % 2 == 1 {
        return Err(invalid(format!("no table cell for N = {param}, n = {n}")));
    }
    TABLE1[param][n / 2].parse()
}

/// All cells as `(N, n, value)` in row-major order.
pub fn table1() -> Vec<(usize, usize, Rational)> {
    let mut out = Vec::with_capacity(56);
    for param in 0..=TABLE1_MAX_PARAM {
        for n in (0..=TABLE1_MAX_INDEX).step_by(2) {
            out.push((
                param,
                n,
                table1_cell(param, n).expect("embedded cell parses"),
            ));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::hg_euler_recurrence;

    #[test]
    fn cells_parse_and_match_recurrence() {
        let cells = table1();
        assert_eq!(cells.len(), 56);
        for (param, n, v) in cells {
            assert_eq!(
                hg_euler_recurrence(param, 14).get(n),
                &v,
                "N = {param}, n = {n}"
            );
        }
    }

    #[test]
    fn spot_cells() {
        assert_eq!(
            table1_cell(4, 12).unwrap(),
            Rational::new(558_599_021, 126_395_447_928_750)
        );
        assert_eq!(table1_cell(6, 2).unwrap(), Rational::new(-1, 91));
        assert!(table1_cell(7, 0).is_err());
        assert!(table1_cell(0, 3).is_err());
    }
}
