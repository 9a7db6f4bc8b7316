//! Published error tables for the four manufactured examples.

/// One row: resolution divisor `N` (step `1/N`), max-norm error and rate,
/// L2 error and rate. Rates are `None` on the first row of a block.
#[derive(Debug, Clone, Copy)]
pub struct TableRow {
    pub divisions: usize,
    pub error_max: f64,
    pub rate_max: Option<f64>,
    pub error_l2: f64,
    pub rate_l2: Option<f64>,
}

#[derive(Debug, Clone, Copy)]
pub struct TableBlock {
    pub alpha: f64,
    pub rows: &'static [TableRow],
}

pub const TABLE_1: &[TableBlock] = &[
    TableBlock {
        alpha: 0.1,
        rows: &[
            TableRow { divisions: 8, error_max: 6.9433e-05, rate_max: None, error_l2: 5.0972e-05, rate_l2: None },
            TableRow { divisions: 16, error_max: 1.8594e-05, rate_max: Some(1.9007), error_l2: 1.3514e-05, rate_l2: Some(1.9152) },
            TableRow { divisions: 32, error_max: 4.7487e-06, rate_max: Some(1.9693), error_l2: 3.4269e-06, rate_l2: Some(1.9795) },
            TableRow { divisions: 64, error_max: 1.1958e-06, rate_max: Some(1.9896), error_l2: 8.6184e-07, rate_l2: Some(1.9914) },
            TableRow { divisions: 128, error_max: 3.0034e-07, rate_max: Some(1.9933), error_l2: 2.1639e-07, rate_l2: Some(1.9938) },
        ],
    },
    TableBlock {
        alpha: 0.5,
        rows: &[
            TableRow { divisions: 8, error_max: 5.5452e-04, rate_max: None, error_l2: 3.4264e-04, rate_l2: None },
            TableRow { divisions: 16, error_max: 1.4046e-04, rate_max: Some(1.9810), error_l2: 8.6759e-05, rate_l2: Some(1.9816) },
            TableRow { divisions: 32, error_max: 3.5268e-05, rate_max: Some(1.9938), error_l2: 2.1774e-05, rate_l2: Some(1.9944) },
            TableRow { divisions: 64, error_max: 8.8017e-06, rate_max: Some(2.0025), error_l2: 5.4299e-06, rate_l2: Some(2.0036) },
            TableRow { divisions: 128, error_max: 2.1711e-06, rate_max: Some(2.0194), error_l2: 1.3362e-06, rate_l2: Some(2.0227) },
        ],
    },
    TableBlock {
        alpha: 0.9,
        rows: &[
            TableRow { divisions: 8, error_max: 1.1057e-03, rate_max: None, error_l2: 6.9253e-04, rate_l2: None },
            TableRow { divisions: 16, error_max: 2.7756e-04, rate_max: Some(1.9941), error_l2: 1.7381e-04, rate_l2: Some(1.9944) },
            TableRow { divisions: 32, error_max: 6.9391e-05, rate_max: Some(2.0000), error_l2: 4.3440e-05, rate_l2: Some(2.0004) },
            TableRow { divisions: 64, error_max: 1.7304e-05, rate_max: Some(2.0036), error_l2: 1.0828e-05, rate_l2: Some(2.0043) },
            TableRow { divisions: 128, error_max: 4.2930e-06, rate_max: Some(2.0110), error_l2: 2.6833e-06, rate_l2: Some(2.0127) },
        ],
    },
    TableBlock {
        alpha: 0.99,
        rows: &[
            TableRow { divisions: 8, error_max: 1.2116e-03, rate_max: None, error_l2: 7.6041e-04, rate_l2: None },
            TableRow { divisions: 16, error_max: 3.0380e-04, rate_max: Some(1.9958), error_l2: 1.9066e-04, rate_l2: Some(1.9958) },
            TableRow { divisions: 32, error_max: 7.5972e-05, rate_max: Some(1.9996), error_l2: 4.7675e-05, rate_l2: Some(1.9997) },
            TableRow { divisions: 64, error_max: 1.8967e-05, rate_max: Some(2.0020), error_l2: 1.1900e-05, rate_l2: Some(2.0023) },
            TableRow { divisions: 128, error_max: 4.7154e-06, rate_max: Some(2.0081), error_l2: 2.9559e-06, rate_l2: Some(2.0093) },
        ],
    },
];

pub const TABLE_2: &[TableBlock] = &[
    TableBlock {
        alpha: 0.1,
        rows: &[
            TableRow { divisions: 8, error_max: 2.6665e-03, rate_max: None, error_l2: 1.9792e-03, rate_l2: None },
            TableRow { divisions: 16, error_max: 6.6754e-04, rate_max: Some(1.9980), error_l2: 4.9576e-04, rate_l2: Some(1.9972) },
            TableRow { divisions: 32, error_max: 1.6749e-04, rate_max: Some(1.9948), error_l2: 1.2398e-04, rate_l2: Some(1.9995) },
            TableRow { divisions: 64, error_max: 4.1873e-05, rate_max: Some(2.0000), error_l2: 3.0997e-05, rate_l2: Some(2.0000) },
            TableRow { divisions: 128, error_max: 1.0468e-05, rate_max: Some(2.0001), error_l2: 7.7491e-06, rate_l2: Some(2.0000) },
        ],
    },
    TableBlock {
        alpha: 0.5,
        rows: &[
            TableRow { divisions: 8, error_max: 1.8911e-03, rate_max: None, error_l2: 1.4793e-03, rate_l2: None },
            TableRow { divisions: 16, error_max: 4.8047e-04, rate_max: Some(1.9767), error_l2: 3.7325e-04, rate_l2: Some(1.9867) },
            TableRow { divisions: 32, error_max: 1.2030e-04, rate_max: Some(1.9978), error_l2: 9.3494e-05, rate_l2: Some(1.9972) },
            TableRow { divisions: 64, error_max: 3.0083e-05, rate_max: Some(1.9996), error_l2: 2.3385e-05, rate_l2: Some(1.9993) },
            TableRow { divisions: 128, error_max: 7.5230e-06, rate_max: Some(1.9996), error_l2: 5.8475e-06, rate_l2: Some(1.9997) },
        ],
    },
    TableBlock {
        alpha: 0.9,
        rows: &[
            TableRow { divisions: 8, error_max: 1.1794e-03, rate_max: None, error_l2: 9.3874e-04, rate_l2: None },
            TableRow { divisions: 16, error_max: 3.0221e-04, rate_max: Some(1.9645), error_l2: 2.4153e-04, rate_l2: Some(1.9585) },
            TableRow { divisions: 32, error_max: 7.6410e-05, rate_max: Some(1.9837), error_l2: 6.0837e-05, rate_l2: Some(1.9892) },
            TableRow { divisions: 64, error_max: 1.9150e-05, rate_max: Some(1.9964), error_l2: 1.5251e-05, rate_l2: Some(1.9960) },
            TableRow { divisions: 128, error_max: 4.7945e-06, rate_max: Some(1.9979), error_l2: 3.8192e-06, rate_l2: Some(1.9976) },
        ],
    },
    TableBlock {
        alpha: 0.99,
        rows: &[
            TableRow { divisions: 8, error_max: 1.0616e-03, rate_max: None, error_l2: 8.2033e-04, rate_l2: None },
            TableRow { divisions: 16, error_max: 2.7337e-04, rate_max: Some(1.9573), error_l2: 2.1251e-04, rate_l2: Some(1.9487) },
            TableRow { divisions: 32, error_max: 6.8854e-05, rate_max: Some(1.9892), error_l2: 5.3586e-05, rate_l2: Some(1.9876) },
            TableRow { divisions: 64, error_max: 1.7248e-05, rate_max: Some(1.9971), error_l2: 1.3427e-05, rate_l2: Some(1.9967) },
            TableRow { divisions: 128, error_max: 4.3148e-06, rate_max: Some(1.9991), error_l2: 3.3594e-06, rate_l2: Some(1.9989) },
        ],
    },
];

pub const TABLE_3: &[TableBlock] = &[
    TableBlock {
        alpha: 0.1,
        rows: &[
            TableRow { divisions: 8, error_max: 1.5098e-02, rate_max: None, error_l2: 1.0946e-02, rate_l2: None },
            TableRow { divisions: 16, error_max: 3.9373e-03, rate_max: Some(1.9391), error_l2: 2.8543e-03, rate_l2: Some(1.9392) },
            TableRow { divisions: 32, error_max: 1.0050e-03, rate_max: Some(1.9701), error_l2: 7.2853e-04, rate_l2: Some(1.9701) },
            TableRow { divisions: 64, error_max: 2.5387e-04, rate_max: Some(1.9850), error_l2: 1.8403e-04, rate_l2: Some(1.9850) },
            TableRow { divisions: 128, error_max: 6.3805e-05, rate_max: Some(1.9923), error_l2: 4.6253e-05, rate_l2: Some(1.9924) },
        ],
    },
    TableBlock {
        alpha: 0.5,
        rows: &[
            TableRow { divisions: 8, error_max: 6.1110e-03, rate_max: None, error_l2: 4.4415e-03, rate_l2: None },
            TableRow { divisions: 16, error_max: 1.6381e-03, rate_max: Some(1.8994), error_l2: 1.1903e-03, rate_l2: Some(1.8998) },
            TableRow { divisions: 32, error_max: 4.2686e-04, rate_max: Some(1.9402), error_l2: 3.1013e-04, rate_l2: Some(1.9403) },
            TableRow { divisions: 64, error_max: 1.0954e-04, rate_max: Some(1.9623), error_l2: 7.9582e-05, rate_l2: Some(1.9624) },
            TableRow { divisions: 128, error_max: 2.7860e-05, rate_max: Some(1.9752), error_l2: 2.0239e-05, rate_l2: Some(1.9753) },
        ],
    },
    TableBlock {
        alpha: 0.9,
        rows: &[
            TableRow { divisions: 8, error_max: 4.5768e-03, rate_max: None, error_l2: 3.3053e-03, rate_l2: None },
            TableRow { divisions: 16, error_max: 1.1034e-03, rate_max: Some(2.0524), error_l2: 7.9662e-04, rate_l2: Some(2.0528) },
            TableRow { divisions: 32, error_max: 2.6570e-04, rate_max: Some(2.0541), error_l2: 1.9179e-04, rate_l2: Some(2.0544) },
            TableRow { divisions: 64, error_max: 6.3990e-05, rate_max: Some(2.0539), error_l2: 4.6179e-05, rate_l2: Some(2.0542) },
            TableRow { divisions: 128, error_max: 1.5417e-05, rate_max: Some(2.0533), error_l2: 1.1124e-05, rate_l2: Some(2.0536) },
        ],
    },
    TableBlock {
        alpha: 0.99,
        rows: &[
            TableRow { divisions: 8, error_max: 7.3815e-03, rate_max: None, error_l2: 5.3407e-03, rate_l2: None },
            TableRow { divisions: 16, error_max: 1.8457e-03, rate_max: Some(1.9997), error_l2: 1.3353e-03, rate_l2: Some(1.9999) },
            TableRow { divisions: 32, error_max: 4.6040e-04, rate_max: Some(2.0032), error_l2: 3.3306e-04, rate_l2: Some(2.0033) },
            TableRow { divisions: 64, error_max: 1.1476e-04, rate_max: Some(2.0042), error_l2: 8.3021e-05, rate_l2: Some(2.0042) },
            TableRow { divisions: 128, error_max: 2.8601e-05, rate_max: Some(2.0046), error_l2: 2.0689e-05, rate_l2: Some(2.0046) },
        ],
    },
];

pub const TABLE_4: &[TableBlock] = &[
    TableBlock {
        alpha: 0.1,
        rows: &[
            TableRow { divisions: 8, error_max: 1.5231e-02, rate_max: None, error_l2: 1.1082e-02, rate_l2: None },
            TableRow { divisions: 16, error_max: 3.9819e-03, rate_max: Some(1.9355), error_l2: 2.8977e-03, rate_l2: Some(1.9352) },
            TableRow { divisions: 32, error_max: 1.0208e-03, rate_max: Some(1.9637), error_l2: 7.3994e-04, rate_l2: Some(1.9694) },
            TableRow { divisions: 64, error_max: 2.5788e-04, rate_max: Some(1.9850), error_l2: 1.8692e-04, rate_l2: Some(1.9850) },
            TableRow { divisions: 128, error_max: 6.4807e-05, rate_max: Some(1.9925), error_l2: 4.6974e-05, rate_l2: Some(1.9925) },
        ],
    },
    TableBlock {
        alpha: 0.5,
        rows: &[
            TableRow { divisions: 8, error_max: 6.2979e-03, rate_max: None, error_l2: 4.5873e-03, rate_l2: None },
            TableRow { divisions: 16, error_max: 1.6916e-03, rate_max: Some(1.8965), error_l2: 1.2321e-03, rate_l2: Some(1.8965) },
            TableRow { divisions: 32, error_max: 4.4183e-04, rate_max: Some(1.9368), error_l2: 3.2095e-04, rate_l2: Some(1.9408) },
            TableRow { divisions: 64, error_max: 1.1331e-04, rate_max: Some(1.9632), error_l2: 8.2304e-05, rate_l2: Some(1.9633) },
            TableRow { divisions: 128, error_max: 2.8804e-05, rate_max: Some(1.9759), error_l2: 2.0919e-05, rate_l2: Some(1.9761) },
        ],
    },
    TableBlock {
        alpha: 0.9,
        rows: &[
            TableRow { divisions: 8, error_max: 4.3247e-03, rate_max: None, error_l2: 3.1435e-03, rate_l2: None },
            TableRow { divisions: 16, error_max: 1.0469e-03, rate_max: Some(2.0464), error_l2: 7.5722e-04, rate_l2: Some(2.0536) },
            TableRow { divisions: 32, error_max: 2.5209e-04, rate_max: Some(2.0542), error_l2: 1.8198e-04, rate_l2: Some(2.0569) },
            TableRow { divisions: 64, error_max: 6.0614e-05, rate_max: Some(2.0562), error_l2: 4.3733e-05, rate_l2: Some(2.0570) },
            TableRow { divisions: 128, error_max: 1.4577e-05, rate_max: Some(2.0559), error_l2: 1.0514e-05, rate_l2: Some(2.0564) },
        ],
    },
    TableBlock {
        alpha: 0.99,
        rows: &[
            TableRow { divisions: 8, error_max: 7.1124e-03, rate_max: None, error_l2: 5.1736e-03, rate_l2: None },
            TableRow { divisions: 16, error_max: 1.7871e-03, rate_max: Some(1.9927), error_l2: 1.2965e-03, rate_l2: Some(1.9965) },
            TableRow { divisions: 32, error_max: 4.4722e-04, rate_max: Some(1.9986), error_l2: 3.2353e-04, rate_l2: Some(2.0026) },
            TableRow { divisions: 64, error_max: 1.1149e-04, rate_max: Some(2.0041), error_l2: 8.0652e-05, rate_l2: Some(2.0041) },
            TableRow { divisions: 128, error_max: 2.7787e-05, rate_max: Some(2.0044), error_l2: 2.0100e-05, rate_l2: Some(2.0045) },
        ],
    },
];

pub const TABLE_6: &[TableBlock] = &[
    TableBlock {
        alpha: 0.1,
        rows: &[
            TableRow { divisions: 4, error_max: 1.5420e-03, rate_max: None, error_l2: 7.8627e-04, rate_l2: None },
            TableRow { divisions: 8, error_max: 3.8160e-04, rate_max: Some(2.0147), error_l2: 1.9651e-04, rate_l2: Some(2.0004) },
            TableRow { divisions: 16, error_max: 9.5245e-05, rate_max: Some(2.0023), error_l2: 4.9173e-05, rate_l2: Some(1.9987) },
            TableRow { divisions: 32, error_max: 2.3804e-05, rate_max: Some(2.0005), error_l2: 1.2297e-05, rate_l2: Some(1.9996) },
            TableRow { divisions: 64, error_max: 5.9563e-06, rate_max: Some(1.9987), error_l2: 3.0744e-06, rate_l2: Some(1.9999) },
        ],
    },
    TableBlock {
        alpha: 0.5,
        rows: &[
            TableRow { divisions: 4, error_max: 1.5218e-03, rate_max: None, error_l2: 7.7609e-04, rate_l2: None },
            TableRow { divisions: 8, error_max: 3.7667e-04, rate_max: Some(2.0144), error_l2: 1.9403e-04, rate_l2: Some(2.0000) },
            TableRow { divisions: 16, error_max: 9.4016e-05, rate_max: Some(2.0023), error_l2: 4.8554e-05, rate_l2: Some(1.9986) },
            TableRow { divisions: 32, error_max: 2.3495e-05, rate_max: Some(2.0006), error_l2: 1.2141e-05, rate_l2: Some(1.9997) },
            TableRow { divisions: 64, error_max: 5.8756e-06, rate_max: Some(1.9995), error_l2: 3.0341e-06, rate_l2: Some(2.0005) },
        ],
    },
    TableBlock {
        alpha: 0.9,
        rows: &[
            TableRow { divisions: 4, error_max: 1.4876e-03, rate_max: None, error_l2: 7.5889e-04, rate_l2: None },
            TableRow { divisions: 8, error_max: 3.6829e-04, rate_max: Some(2.0140), error_l2: 1.8981e-04, rate_l2: Some(1.9994) },
            TableRow { divisions: 16, error_max: 9.1930e-05, rate_max: Some(2.0023), error_l2: 4.7502e-05, rate_l2: Some(1.9985) },
            TableRow { divisions: 32, error_max: 2.2973e-05, rate_max: Some(2.0006), error_l2: 1.1877e-05, rate_l2: Some(1.9998) },
            TableRow { divisions: 64, error_max: 5.7422e-06, rate_max: Some(2.0003), error_l2: 2.9672e-06, rate_l2: Some(2.0010) },
        ],
    },
    TableBlock {
        alpha: 0.99,
        rows: &[
            TableRow { divisions: 4, error_max: 1.4761e-03, rate_max: None, error_l2: 7.5313e-04, rate_l2: None },
            TableRow { divisions: 8, error_max: 3.6549e-04, rate_max: Some(2.0139), error_l2: 1.8839e-04, rate_l2: Some(1.9992) },
            TableRow { divisions: 16, error_max: 9.1231e-05, rate_max: Some(2.0022), error_l2: 4.7149e-05, rate_l2: Some(1.9984) },
            TableRow { divisions: 32, error_max: 2.2799e-05, rate_max: Some(2.0006), error_l2: 1.1789e-05, rate_l2: Some(1.9998) },
            TableRow { divisions: 64, error_max: 5.6981e-06, rate_max: Some(2.0004), error_l2: 2.9450e-06, rate_l2: Some(2.0011) },
        ],
    },
];

pub const TABLE_8: &[TableBlock] = &[
    TableBlock {
        alpha: 0.1,
        rows: &[
            TableRow { divisions: 4, error_max: 1.7695e-03, rate_max: None, error_l2: 1.0272e-03, rate_l2: None },
            TableRow { divisions: 8, error_max: 4.9258e-04, rate_max: Some(1.8450), error_l2: 2.7523e-04, rate_l2: Some(1.8999) },
            TableRow { divisions: 16, error_max: 1.2546e-04, rate_max: Some(1.9732), error_l2: 7.0160e-05, rate_l2: Some(1.9719) },
            TableRow { divisions: 32, error_max: 3.2060e-05, rate_max: Some(1.9683), error_l2: 1.7865e-05, rate_l2: Some(1.9736) },
            TableRow { divisions: 64, error_max: 8.4859e-06, rate_max: Some(1.9176), error_l2: 4.7277e-06, rate_l2: Some(1.9179) },
        ],
    },
    TableBlock {
        alpha: 0.5,
        rows: &[
            TableRow { divisions: 4, error_max: 1.7251E-03, rate_max: None, error_l2: 1.0040E-03, rate_l2: None },
            TableRow { divisions: 8, error_max: 4.8191E-04, rate_max: Some(1.8399), error_l2: 2.6937E-04, rate_l2: Some(1.8981) },
            TableRow { divisions: 16, error_max: 1.2287E-04, rate_max: Some(1.9716), error_l2: 6.8746E-05, rate_l2: Some(1.9702) },
            TableRow { divisions: 32, error_max: 3.1486E-05, rate_max: Some(1.9643), error_l2: 1.7570E-05, rate_l2: Some(1.9681) },
            TableRow { divisions: 64, error_max: 8.4457E-06, rate_max: Some(1.8984), error_l2: 4.7140E-06, rate_l2: Some(1.8981) },
        ],
    },
    TableBlock {
        alpha: 0.9,
        rows: &[
            TableRow { divisions: 4, error_max: 1.6515e-03, rate_max: None, error_l2: 9.6563e-04, rate_l2: None },
            TableRow { divisions: 8, error_max: 4.6383e-04, rate_max: Some(1.8321), error_l2: 2.5944e-04, rate_l2: Some(1.8961) },
            TableRow { divisions: 16, error_max: 1.1818e-04, rate_max: Some(1.9726), error_l2: 6.6175e-05, rate_l2: Some(1.9711) },
            TableRow { divisions: 32, error_max: 3.0124e-05, rate_max: Some(1.9720), error_l2: 1.6852e-05, rate_l2: Some(1.9733) },
            TableRow { divisions: 64, error_max: 7.9706e-06, rate_max: Some(1.9181), error_l2: 4.4601e-06, rate_l2: Some(1.9178) },
        ],
    },
    TableBlock {
        alpha: 0.99,
        rows: &[
            TableRow { divisions: 4, error_max: 1.6284e-03, rate_max: None, error_l2: 9.5357e-04, rate_l2: None },
            TableRow { divisions: 8, error_max: 4.5807e-04, rate_max: Some(1.8298), error_l2: 2.5629e-04, rate_l2: Some(1.8956) },
            TableRow { divisions: 16, error_max: 1.1662e-04, rate_max: Some(1.9737), error_l2: 6.5322e-05, rate_l2: Some(1.9721) },
            TableRow { divisions: 32, error_max: 2.9612e-05, rate_max: Some(1.9776), error_l2: 1.6580e-05, rate_l2: Some(1.9781) },
            TableRow { divisions: 64, error_max: 7.7370e-06, rate_max: Some(1.9363), error_l2: 4.3328e-06, rate_l2: Some(1.9360) },
        ],
    },
];
