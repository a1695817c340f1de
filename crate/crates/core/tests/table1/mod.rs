//! Reference orthogonal family of 72 permutations of {0,...,8}, obtained
//! from the columns of 8 pairwise orthogonal Latin squares of order 9.
//! Digit `x` of each string is the position assigned to element `x`.

use tourinv::zeta::OrthogonalFamily;
use tourinv::Permutation;

pub const FAMILY_Q9: [&str; 72] = [
    "012345678", "120453786", "201534867", "345678012", "453786120", "534867201",
    "678012345", "786120453", "867201534", "021687354", "102768435", "210876543",
    "354021687", "435102768", "543210876", "687354021", "768435102", "876543210",
    "036471825", "147582603", "258360714", "360714258", "471825036", "582603147",
    "603147582", "714258360", "825036471", "048723561", "156804372", "237615480",
    "372156804", "480237615", "561048723", "615480237", "723561048", "804372156",
    "057138246", "138246057", "246057138", "381462570", "462570381", "570381462",
    "624705813", "705813624", "813624705", "063852417", "174630528", "285741306",
    "306285741", "417063852", "528174630", "630528174", "741306285", "852417063",
    "075264183", "183075264", "264183075", "318507426", "426318507", "507426318",
    "642831750", "750642831", "831750642", "084516732", "165327840", "273408651",
    "327840165", "408651273", "516732084", "651273408", "732084516", "840165327",
];

pub fn reference_family() -> OrthogonalFamily {
    let perms: Vec<Permutation> = FAMILY_Q9
        .iter()
        .map(|s| {
            let pos: Vec<usize> = s.chars().map(|c| c.to_digit(10).unwrap() as usize).collect();
            Permutation::from_pos(pos).expect("fixture rows are permutations")
        })
        .collect();
    OrthogonalFamily::from_perms(9, perms).expect("fixture family is orthogonal")
}
