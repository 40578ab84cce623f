//! The green supply chain reference model.
//!
//! Forward chain: raw material supplier → manufacturer → wholesaler →
//! retailer → customer. Reverse chain: collecting point, recycling plant,
//! disassembly plant, secondary material market, with a government agency
//! collecting a per-production recycling fee and paying it back out as
//! disassembly subsidies.
//!
//! Every transaction moves one CASH token one way and one MATERIAL /
//! PRODUCTS / USED token the other way. The two inhibitor arcs on P0' stop
//! the manufacturer from procuring material while it already holds some.

use thiserror::Error;

use crate::engine::SimulationConfig;
use crate::net::{ArcInscription, ArcTerm, ColorSet, InitEntry, Net, Place, Term, Transition};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GscmError {
    #[error("rawMaterialStock must be at least 1")]
    EmptyRawStock,
}

/// Initial-marking knobs of the model. Cash amounts are initial CASH tokens
/// per actor; `raw_material_stock` is both P1's initial MATERIAL count and
/// its capacity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GscmParameters {
    pub raw_material_stock: u64,
    pub manufacturer_cash: u64,
    pub wholesaler_cash: u64,
    pub retailer_cash: u64,
    pub customer_cash: u64,
    pub collecting_cash: u64,
    pub recycling_cash: u64,
    pub disassembly_cash: u64,
    pub secondary_market_cash: u64,
    pub agency_cash: u64,
}

impl Default for GscmParameters {
    /// Manufacturer and customer get enough cash that material exhaustion,
    /// not cash, ends procurement; the agency starts empty.
    fn default() -> Self {
        GscmParameters {
            raw_material_stock: 1000,
            manufacturer_cash: 5000,
            wholesaler_cash: 1000,
            retailer_cash: 1000,
            customer_cash: 5000,
            collecting_cash: 1000,
            recycling_cash: 1000,
            disassembly_cash: 1000,
            secondary_market_cash: 1000,
            agency_cash: 0,
        }
    }
}

impl GscmParameters {
    /// Small instance whose full state space is cheap to enumerate; used for
    /// oracle cross-checks and graph exports.
    pub fn scaled_down(raw_material_stock: u64) -> Self {
        GscmParameters {
            raw_material_stock,
            manufacturer_cash: 2,
            wholesaler_cash: 1,
            retailer_cash: 1,
            customer_cash: 2,
            collecting_cash: 1,
            recycling_cash: 1,
            disassembly_cash: 1,
            secondary_market_cash: 1,
            agency_cash: 0,
        }
    }
}

const CASH: &str = "CASH";
const MATERIAL: &str = "MATERIAL";
const PRODUCTS: &str = "PRODUCTS";
const USED: &str = "USED";
const WASTE: &str = "WASTE";

fn one(value: &str) -> ArcInscription {
    ArcInscription {
        terms: vec![ArcTerm {
            multiplicity: 1,
            term: Term::Value(value.into()),
        }],
    }
}

/// Builds the model. The net has the places P0–P11 (with primes) and
/// transitions T0–T19 of the reference description, and nothing else.
pub fn build_gscm_net(params: &GscmParameters) -> Result<Net, GscmError> {
    if params.raw_material_stock == 0 {
        return Err(GscmError::EmptyRawStock);
    }

    let color_sets = vec![
        ColorSet { name: CASH.into(), values: vec!["cash".into()] },
        ColorSet { name: MATERIAL.into(), values: vec!["material".into()] },
        ColorSet { name: PRODUCTS.into(), values: vec!["product".into()] },
        ColorSet { name: USED.into(), values: vec!["used".into()] },
        ColorSet { name: WASTE.into(), values: vec!["waste".into()] },
    ];

    let cash_init = |n: u64| -> Vec<InitEntry> {
        if n == 0 {
            vec![]
        } else {
            vec![InitEntry { count: n, value: "cash".into() }]
        }
    };
    let place = |name: &str, cs: &str, initial: Vec<InitEntry>, capacity: Option<u64>| Place {
        name: name.into(),
        color_set: cs.into(),
        capacity,
        initial,
    };

    let places = vec![
        place("P0", CASH, cash_init(params.manufacturer_cash), None),
        place("P0'", MATERIAL, vec![], None),
        place("P0''", PRODUCTS, vec![], None),
        place("P1", CASH, vec![], None),
        place(
            "P1'",
            MATERIAL,
            vec![InitEntry { count: params.raw_material_stock, value: "material".into() }],
            Some(params.raw_material_stock),
        ),
        place("P2", CASH, cash_init(params.wholesaler_cash), None),
        place("P2'", PRODUCTS, vec![], None),
        place("P3", CASH, cash_init(params.customer_cash), None),
        place("P3'", PRODUCTS, vec![], None),
        place("P3''", USED, vec![], None),
        place("P4", CASH, cash_init(params.retailer_cash), None),
        place("P4'", PRODUCTS, vec![], None),
        place("P5", CASH, cash_init(params.collecting_cash), None),
        place("P5'", USED, vec![], None),
        place("P6", CASH, cash_init(params.recycling_cash), None),
        place("P6'", USED, vec![], None),
        place("P6''", USED, vec![], None),
        place("P7", CASH, cash_init(params.disassembly_cash), None),
        place("P7'", USED, vec![], None),
        place("P7''", MATERIAL, vec![], None),
        place("P8", WASTE, vec![], None),
        place("P9", CASH, cash_init(params.secondary_market_cash), None),
        place("P9'", MATERIAL, vec![], None),
        place("P10", CASH, vec![], None),
        place("P11", CASH, cash_init(params.agency_cash), None),
    ];

    let trans = |name: &str,
                 inputs: Vec<(&str, &str)>,
                 outputs: Vec<(&str, &str)>,
                 inhibitors: Vec<(&str, u64)>| Transition {
        name: name.into(),
        inputs: inputs.into_iter().map(|(p, v)| (p.to_string(), one(v))).collect(),
        outputs: outputs.into_iter().map(|(p, v)| (p.to_string(), one(v))).collect(),
        inhibitors: inhibitors.into_iter().map(|(p, k)| (p.to_string(), k)).collect(),
    };

    let transitions = vec![
        // Production: material in, product out, recycling fee to P10.
        trans(
            "T0",
            vec![("P0", "cash"), ("P0'", "material")],
            vec![("P0''", "product"), ("P10", "cash")],
            vec![],
        ),
        // Procurement from the raw material supplier, blocked while the
        // manufacturer already holds material.
        trans(
            "T1",
            vec![("P0", "cash"), ("P1'", "material")],
            vec![("P1", "cash"), ("P0'", "material")],
            vec![("P0'", 1)],
        ),
        // Procurement from the secondary material market, same inhibitor.
        trans(
            "T2",
            vec![("P0", "cash"), ("P9'", "material")],
            vec![("P9", "cash"), ("P0'", "material")],
            vec![("P0'", 1)],
        ),
        // Wholesaler buys from manufacturer.
        trans(
            "T3",
            vec![("P2", "cash"), ("P0''", "product")],
            vec![("P0", "cash"), ("P2'", "product")],
            vec![],
        ),
        // Customer buys from manufacturer.
        trans(
            "T4",
            vec![("P3", "cash"), ("P0''", "product")],
            vec![("P0", "cash"), ("P3'", "product")],
            vec![],
        ),
        // Retailer buys from wholesaler.
        trans(
            "T5",
            vec![("P4", "cash"), ("P2'", "product")],
            vec![("P2", "cash"), ("P4'", "product")],
            vec![],
        ),
        // Customer buys from wholesaler.
        trans(
            "T6",
            vec![("P3", "cash"), ("P2'", "product")],
            vec![("P2", "cash"), ("P3'", "product")],
            vec![],
        ),
        // Customer buys from retailer.
        trans(
            "T7",
            vec![("P3", "cash"), ("P4'", "product")],
            vec![("P4", "cash"), ("P3'", "product")],
            vec![],
        ),
        // Customer uses the product up.
        trans("T8", vec![("P3'", "product")], vec![("P3''", "used")], vec![]),
        // Disposal routes; the customer receives money on each.
        trans(
            "T9",
            vec![("P3''", "used"), ("P5", "cash")],
            vec![("P5'", "used"), ("P3", "cash")],
            vec![],
        ),
        trans(
            "T10",
            vec![("P3''", "used"), ("P6", "cash")],
            vec![("P6'", "used"), ("P3", "cash")],
            vec![],
        ),
        trans(
            "T11",
            vec![("P3''", "used"), ("P7", "cash")],
            vec![("P7'", "used"), ("P3", "cash")],
            vec![],
        ),
        // Collecting point forwards to recycling / disassembly.
        trans("T12", vec![("P5'", "used")], vec![("P6'", "used")], vec![]),
        trans("T13", vec![("P5'", "used")], vec![("P7'", "used")], vec![]),
        // Recycling improves condition, item stays in the reverse flow.
        trans("T14", vec![("P6'", "used")], vec![("P6''", "used")], vec![]),
        trans("T15", vec![("P6''", "used")], vec![("P7'", "used")], vec![]),
        // Disassembly splits one item into reusable material plus waste.
        trans(
            "T16",
            vec![("P7'", "used")],
            vec![("P7''", "material"), ("P8", "waste")],
            vec![],
        ),
        // Disassembly sells recovered material to the secondary market.
        trans(
            "T17",
            vec![("P7''", "material"), ("P9", "cash")],
            vec![("P9'", "material"), ("P7", "cash")],
            vec![],
        ),
        // Recycling fee to the agency, then subsidy to disassembly.
        trans("T18", vec![("P10", "cash")], vec![("P11", "cash")], vec![]),
        trans("T19", vec![("P11", "cash")], vec![("P7", "cash")], vec![]),
    ];

    Ok(Net {
        name: "gscm".into(),
        color_sets,
        variables: vec![],
        places,
        transitions,
    })
}

/// The documented reference run: default parameters, 50,000 random firings,
/// seed 1, no trace.
pub fn reference_scenario() -> (Net, SimulationConfig) {
    let net = build_gscm_net(&GscmParameters::default()).expect("default parameters are valid");
    let config = SimulationConfig {
        max_steps: 50_000,
        seed: 1,
        record_trace: false,
    };
    (net, config)
}
