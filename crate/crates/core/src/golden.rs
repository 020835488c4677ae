//! Exact values of `F(2^k)` for `1 <= k <= 40`.

use crate::arith::ExactInt;

/// `(k, F(2^k))` as decimal strings.
pub const POWERS_OF_TWO: [(u32, &str); 40] = [
    (1, "1"),
    (2, "44"),
    (3, "1192"),
    (4, "27128"),
    (5, "564120"),
    (6, "11114080"),
    (7, "211224480"),
    (8, "3914221216"),
    (9, "71182606216"),
    (10, "1275797150128"),
    (11, "22602804487208"),
    (12, "396685572297544"),
    (13, "6907621416632376"),
    (14, "119492377263166968"),
    (15, "2055404973525169560"),
    (16, "35182910663019639384"),
    (17, "599669468453524178752"),
    (18, "10182597857710132553464"),
    (19, "172327747508964813792096"),
    (20, "2907742868855598433202344"),
    (21, "48931868439876126051425552"),
    (22, "821437615651793675198669752"),
    (23, "13759445380252558103053449112"),
    (24, "230014222561387209679445816240"),
    (25, "3838037104619867210112196814232"),
    (26, "63933546372113490066412405897360"),
    (27, "1063335985124949941305863686097296"),
    (28, "17659763652737469299382592232330696"),
    (29, "292898424695610564494215857912343064"),
    (30, "4851850095158746095561485451592336296"),
    (31, "80277206323003614389748671287223855080"),
    (32, "1326796977975476403092689286862986516504"),
    (33, "21906538476526319541299023010218991588136"),
    (34, "361349204887120272089523042249821840571528"),
    (35, "5955100706397110811260922659812491131662432"),
    (36, "98057826153604756744005601368029402514221504"),
    (37, "1613344656077691850026984888873116366804460232"),
    (38, "26524225499163321460061315970545176007812869616"),
    (39, "435758984017337173124103405065600778830350047408"),
    (40, "7154085760768979246024995359851578213153827420872"),
];

/// `F(2^k)` for `1 <= k <= 40`.
pub fn power_of_two(k: u32) -> Option<ExactInt> {
    let (_, v) = POWERS_OF_TWO.iter().find(|(j, _)| *j == k)?;
    Some(ExactInt::parse_decimal(v).expect("table entries are valid decimals"))
}
